#pragma once

#include <string>

#include "model.hpp"

namespace cchp {

// Parse a scenario from JSON text. `origin` names the source in
// diagnostics. Throws std::runtime_error naming the offending field;
// the result is already validated.
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");

// Read and parse a scenario file.
Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& scenario);

}  // namespace cchp
