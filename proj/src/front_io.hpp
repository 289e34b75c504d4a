#pragma once

#include <string>
#include <vector>

#include "moea.hpp"

namespace cchp {

// Interchange format for solution fronts: one row per solution with the
// 3*T decision columns, the three objectives, and the total constraint
// violation, all at 12 significant digits. A header line names the
// columns. Only the violation total survives a round trip; the split
// into electric and heat deficits is not recorded.
std::string front_to_csv(const std::vector<Individual>& members);

// Accepts files with or without the header line. Throws
// std::runtime_error with "origin:line:" context on malformed input.
std::vector<Individual> parse_front_csv(const std::string& text, const std::string& origin);

std::vector<Individual> load_front_csv(const std::string& path);
void save_front_csv(const std::string& path, const std::vector<Individual>& members);

}  // namespace cchp
