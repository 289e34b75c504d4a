#include "scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cchp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw std::runtime_error(origin + ": " + what);
}

double require_number(const json& j, const char* key, const std::string& where,
                      const std::string& origin) {
    if (!j.contains(key)) fail(origin, where + "." + key + " is missing");
    if (!j[key].is_number()) fail(origin, where + "." + key + " must be a number");
    return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where,
                 const std::string& origin) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(origin, where + "." + key + " must be a number");
    return j[key].get<double>();
}

OperatingCase parse_case(const json& v, const std::string& origin) {
    if (v.is_number_integer()) {
        switch (v.get<int>()) {
            case 1: return OperatingCase::FullSystem;
            case 2: return OperatingCase::PguOff;
            case 3: return OperatingCase::BoilerOff;
        }
        fail(origin, "case must be 1, 2 or 3");
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "full_system") return OperatingCase::FullSystem;
        if (s == "pgu_off") return OperatingCase::PguOff;
        if (s == "boiler_off") return OperatingCase::BoilerOff;
        fail(origin, "case must be one of full_system, pgu_off, boiler_off");
    }
    fail(origin, "case must be an integer or a string");
}

Interpretation parse_interpretation(const json& v, const std::string& origin) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "literal") return Interpretation::Literal;
        if (s == "fuel_based") return Interpretation::FuelBased;
    }
    fail(origin, "interpretation must be \"literal\" or \"fuel_based\"");
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(origin, "top level must be an object");

    Scenario sc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail(origin, "name must be a string");
        sc.name = j["name"].get<std::string>();
    }
    if (j.contains("case")) sc.op_case = parse_case(j["case"], origin);
    if (j.contains("interpretation")) {
        sc.interpretation = parse_interpretation(j["interpretation"], origin);
    }
    sc.bound_headroom = number_or(j, "bound_headroom", sc.bound_headroom, "scenario", origin);

    if (j.contains("params")) {
        const json& p = j["params"];
        if (!p.is_object()) fail(origin, "params must be an object");
        SystemParams& s = sc.params;
        s.fuel_electric_slope = number_or(p, "fuel_electric_slope", s.fuel_electric_slope, "params", origin);
        s.fuel_electric_intercept = number_or(p, "fuel_electric_intercept", s.fuel_electric_intercept, "params", origin);
        s.pgu_thermal_eff = number_or(p, "pgu_thermal_eff", s.pgu_thermal_eff, "params", origin);
        s.boiler_eff = number_or(p, "boiler_eff", s.boiler_eff, "params", origin);
        s.cooling_eff = number_or(p, "cooling_eff", s.cooling_eff, "params", origin);
        s.heating_eff = number_or(p, "heating_eff", s.heating_eff, "params", origin);
        s.pec_electricity = number_or(p, "pec_electricity", s.pec_electricity, "params", origin);
        s.pec_gas = number_or(p, "pec_gas", s.pec_gas, "params", origin);
        s.cde_electricity = number_or(p, "cde_electricity", s.cde_electricity, "params", origin);
        s.cde_gas = number_or(p, "cde_gas", s.cde_gas, "params", origin);
    }

    if (j.contains("reference")) {
        const json& r = j["reference"];
        if (!r.is_object()) fail(origin, "reference must be an object");
        if (r.contains("cooling_chain")) {
            sc.reference_cooling_chain = require_number(r, "cooling_chain", "reference", origin);
        }
        if (r.contains("heating_chain")) {
            sc.reference_heating_chain = require_number(r, "heating_chain", "reference", origin);
        }
    }

    if (j.contains("caps")) {
        const json& c = j["caps"];
        if (!c.is_object()) fail(origin, "caps must be an object");
        if (c.contains("grid")) sc.caps.grid = require_number(c, "grid", "caps", origin);
        if (c.contains("pgu_fuel")) sc.caps.pgu_fuel = require_number(c, "pgu_fuel", "caps", origin);
        if (c.contains("boiler_fuel")) {
            sc.caps.boiler_fuel = require_number(c, "boiler_fuel", "caps", origin);
        }
    }

    if (!j.contains("periods")) fail(origin, "periods is missing");
    if (!j["periods"].is_array() || j["periods"].empty()) {
        fail(origin, "periods must be a non-empty array");
    }
    for (std::size_t t = 0; t < j["periods"].size(); ++t) {
        const json& pj = j["periods"][t];
        std::ostringstream where;
        where << "periods[" << t << "]";
        if (!pj.is_object()) fail(origin, where.str() + " must be an object");
        PeriodInput p;
        p.duration_h = number_or(pj, "duration_h", 1.0, where.str(), origin);
        p.demand_electricity = require_number(pj, "demand_electricity", where.str(), origin);
        p.demand_cooling = require_number(pj, "demand_cooling", where.str(), origin);
        p.demand_heating = require_number(pj, "demand_heating", where.str(), origin);
        p.price_electricity = require_number(pj, "price_electricity", where.str(), origin);
        p.price_gas = require_number(pj, "price_gas", where.str(), origin);
        sc.periods.push_back(p);
    }

    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        fail(origin, e.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["name"] = sc.name;
    j["case"] = to_string(sc.op_case);
    j["interpretation"] = to_string(sc.interpretation);
    j["bound_headroom"] = sc.bound_headroom;

    json p;
    p["fuel_electric_slope"] = sc.params.fuel_electric_slope;
    p["fuel_electric_intercept"] = sc.params.fuel_electric_intercept;
    p["pgu_thermal_eff"] = sc.params.pgu_thermal_eff;
    p["boiler_eff"] = sc.params.boiler_eff;
    p["cooling_eff"] = sc.params.cooling_eff;
    p["heating_eff"] = sc.params.heating_eff;
    p["pec_electricity"] = sc.params.pec_electricity;
    p["pec_gas"] = sc.params.pec_gas;
    p["cde_electricity"] = sc.params.cde_electricity;
    p["cde_gas"] = sc.params.cde_gas;
    j["params"] = p;

    if (sc.reference_cooling_chain || sc.reference_heating_chain) {
        json r;
        if (sc.reference_cooling_chain) r["cooling_chain"] = *sc.reference_cooling_chain;
        if (sc.reference_heating_chain) r["heating_chain"] = *sc.reference_heating_chain;
        j["reference"] = r;
    }
    if (sc.caps.grid || sc.caps.pgu_fuel || sc.caps.boiler_fuel) {
        json c;
        if (sc.caps.grid) c["grid"] = *sc.caps.grid;
        if (sc.caps.pgu_fuel) c["pgu_fuel"] = *sc.caps.pgu_fuel;
        if (sc.caps.boiler_fuel) c["boiler_fuel"] = *sc.caps.boiler_fuel;
        j["caps"] = c;
    }

    j["periods"] = json::array();
    for (const PeriodInput& p2 : sc.periods) {
        json pj;
        pj["duration_h"] = p2.duration_h;
        pj["demand_electricity"] = p2.demand_electricity;
        pj["demand_cooling"] = p2.demand_cooling;
        pj["demand_heating"] = p2.demand_heating;
        pj["price_electricity"] = p2.price_electricity;
        pj["price_gas"] = p2.price_gas;
        j["periods"].push_back(pj);
    }
    return j.dump(2) + "\n";
}

}  // namespace cchp
