#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cchp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Thermal component input required to serve the period's demands.
double thermal_requirement(const PeriodInput& p, const SystemParams& s) {
    double req = 0.0;
    if (p.demand_cooling > 0.0) req += p.demand_cooling / s.cooling_eff;
    if (p.demand_heating > 0.0) req += p.demand_heating / s.heating_eff;
    return req;
}

}  // namespace

double Scenario::reference_cooling_eff() const {
    return reference_cooling_chain.value_or(params.boiler_eff * params.cooling_eff);
}

double Scenario::reference_heating_eff() const {
    return reference_heating_chain.value_or(params.boiler_eff * params.heating_eff);
}

void Scenario::validate() const {
    require(!periods.empty(), "scenario: needs at least one period");
    require(bound_headroom >= 1.0, "scenario.bound_headroom: must be >= 1");

    const SystemParams& s = params;
    require(s.fuel_electric_slope > 0.0, "params.fuel_electric_slope: must be > 0");
    require(s.fuel_electric_intercept >= 0.0, "params.fuel_electric_intercept: must be >= 0");
    auto eff_ok = [](double e) { return e > 0.0 && e <= 1.0; };
    require(eff_ok(s.pgu_thermal_eff), "params.pgu_thermal_eff: must be in (0, 1]");
    require(eff_ok(s.boiler_eff), "params.boiler_eff: must be in (0, 1]");
    require(eff_ok(s.cooling_eff), "params.cooling_eff: must be in (0, 1]");
    require(eff_ok(s.heating_eff), "params.heating_eff: must be in (0, 1]");
    // The PGU cannot turn more than its full fuel input into useful output.
    require(1.0 / s.fuel_electric_slope + s.pgu_thermal_eff <= 1.0 + 1e-12,
            "params: 1/fuel_electric_slope + pgu_thermal_eff must not exceed 1");
    require(s.pec_electricity > 0.0 && s.pec_gas > 0.0, "params: energy factors must be > 0");
    require(s.cde_electricity > 0.0 && s.cde_gas > 0.0, "params: emission factors must be > 0");

    if (reference_cooling_chain) {
        require(eff_ok(*reference_cooling_chain), "reference.cooling_chain: must be in (0, 1]");
    }
    if (reference_heating_chain) {
        require(eff_ok(*reference_heating_chain), "reference.heating_chain: must be in (0, 1]");
    }
    for (const auto& cap : {caps.grid, caps.pgu_fuel, caps.boiler_fuel}) {
        if (cap) require(*cap >= 0.0, "caps: must be >= 0");
    }

    for (std::size_t t = 0; t < periods.size(); ++t) {
        const PeriodInput& p = periods[t];
        std::ostringstream where;
        where << "periods[" << t << "]";
        require(p.duration_h > 0.0, where.str() + ".duration_h: must be > 0");
        require(p.demand_electricity >= 0.0 && p.demand_cooling >= 0.0 && p.demand_heating >= 0.0,
                where.str() + ": demands must be >= 0");
        require(p.price_electricity > 0.0, where.str() + ".price_electricity: must be > 0");
        require(p.price_gas > 0.0, where.str() + ".price_gas: must be > 0");
    }
}

PeriodState derive_state(double grid, double pgu_fuel, double boiler_fuel,
                         const SystemParams& params) {
    PeriodState st;
    if (pgu_fuel >= params.fuel_electric_intercept) {
        st.e_pgu = (pgu_fuel - params.fuel_electric_intercept) / params.fuel_electric_slope;
    }
    st.q_rcv = params.pgu_thermal_eff * pgu_fuel;
    st.q_boiler = params.boiler_eff * boiler_fuel;
    st.heat_pool = st.q_rcv + st.q_boiler;
    st.e_supply = grid + st.e_pgu;
    st.loss_pgu = pgu_fuel - st.e_pgu - st.q_rcv;
    st.loss_boiler = boiler_fuel - st.q_boiler;
    st.loss_total = st.loss_pgu + st.loss_boiler;
    return st;
}

PeriodFlows resolve_flows(double grid, double pgu_fuel, double boiler_fuel,
                          const PeriodInput& period, const SystemParams& params) {
    PeriodFlows f;
    f.state = derive_state(grid, pgu_fuel, boiler_fuel, params);

    const double req_cool = period.demand_cooling > 0.0 ? period.demand_cooling / params.cooling_eff : 0.0;
    const double req_heat = period.demand_heating > 0.0 ? period.demand_heating / params.heating_eff : 0.0;
    const double required = req_cool + req_heat;
    const double pool = f.state.heat_pool;

    if (pool >= required) {
        f.thermal_to_cooling = req_cool;
        f.thermal_to_heating = req_heat;
        f.surplus_heat = pool - required;
    } else {
        // Short pool: split proportionally to the requirements.
        const double share = required > 0.0 ? pool / required : 0.0;
        f.thermal_to_cooling = req_cool * share;
        f.thermal_to_heating = req_heat * share;
        f.heat_deficit = required - pool;
    }
    f.cooling_out = params.cooling_eff * f.thermal_to_cooling;
    f.heating_out = params.heating_eff * f.thermal_to_heating;
    f.loss_cooling = f.thermal_to_cooling - f.cooling_out;
    f.loss_heating = f.thermal_to_heating - f.heating_out;

    f.served_electricity = std::min(f.state.e_supply, period.demand_electricity);
    f.excess_electricity = std::max(0.0, f.state.e_supply - period.demand_electricity);
    f.electric_deficit = std::max(0.0, period.demand_electricity - f.state.e_supply);

    f.loss_total = f.state.loss_pgu + f.state.loss_boiler + f.loss_cooling + f.loss_heating;
    return f;
}

ObjectiveVector eval_objectives(const DispatchDecision& decision, const Scenario& scenario) {
    if (decision.size() != scenario.dimension()) {
        std::ostringstream msg;
        msg << "decision has " << decision.size() << " entries, scenario needs "
            << scenario.dimension();
        throw std::invalid_argument(msg.str());
    }
    const SystemParams& s = scenario.params;
    const bool fuel_based = scenario.interpretation == Interpretation::FuelBased;

    ObjectiveVector obj;
    for (std::size_t t = 0; t < scenario.num_periods(); ++t) {
        const PeriodInput& p = scenario.periods[t];
        const double x1 = grid_of(decision, t);
        const double x2 = pgu_fuel_of(decision, t);
        const double x3 = boiler_fuel_of(decision, t);
        const PeriodState st = derive_state(x1, x2, x3, s);

        // Primary energy counts the PGU's fuel only while it runs; below the
        // intercept the unit is off and consumes nothing.
        const bool pgu_on = x2 >= s.fuel_electric_intercept;
        const double pgu_fuel_counted =
            pgu_on ? s.fuel_electric_slope * st.e_pgu + s.fuel_electric_intercept : 0.0;

        const double pgu_cost_basis = fuel_based ? x2 : st.e_pgu;
        const double boiler_fuel_counted = x3;  // q_boiler / boiler_eff

        obj.cost += p.price_electricity * x1 + p.price_gas * pgu_cost_basis +
                    p.price_gas * boiler_fuel_counted;
        obj.pec += s.pec_electricity * x1 + s.pec_gas * pgu_fuel_counted +
                   s.pec_gas * boiler_fuel_counted;
        obj.cde += s.cde_electricity * x1 + s.cde_gas * pgu_cost_basis +
                   s.cde_gas * boiler_fuel_counted;
    }
    return obj;
}

ViolationMeasure violation(const DispatchDecision& decision, const Scenario& scenario) {
    if (decision.size() != scenario.dimension()) {
        throw std::invalid_argument("violation: decision dimension mismatch");
    }
    ViolationMeasure v;
    for (std::size_t t = 0; t < scenario.num_periods(); ++t) {
        const PeriodFlows f = resolve_flows(grid_of(decision, t), pgu_fuel_of(decision, t),
                                            boiler_fuel_of(decision, t), scenario.periods[t],
                                            scenario.params);
        v.electric_deficit += f.electric_deficit;
        v.heat_deficit += f.heat_deficit;
    }
    v.total = v.electric_deficit + v.heat_deficit;
    return v;
}

ObjectiveVector reference_objectives(const Scenario& scenario) {
    const SystemParams& s = scenario.params;
    const double eff_cool = scenario.reference_cooling_eff();
    const double eff_heat = scenario.reference_heating_eff();

    ObjectiveVector obj;
    for (const PeriodInput& p : scenario.periods) {
        double gas = 0.0;
        if (p.demand_cooling > 0.0) gas += p.demand_cooling / eff_cool;
        if (p.demand_heating > 0.0) gas += p.demand_heating / eff_heat;
        obj.cost += p.price_electricity * p.demand_electricity + p.price_gas * gas;
        obj.pec += s.pec_electricity * p.demand_electricity + s.pec_gas * gas;
        obj.cde += s.cde_electricity * p.demand_electricity + s.cde_gas * gas;
    }
    return obj;
}

std::array<double, 3> improvement_rate(const ObjectiveVector& ref, const ObjectiveVector& val) {
    const auto r = ref.as_array();
    const auto v = val.as_array();
    std::array<double, 3> rate{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (r[i] <= 0.0) throw std::invalid_argument("improvement_rate: reference component is zero");
        rate[i] = 100.0 * (r[i] - v[i]) / r[i];
    }
    return rate;
}

Bounds decision_bounds(const Scenario& scenario) {
    const SystemParams& s = scenario.params;
    const double h = scenario.bound_headroom;
    Bounds b;
    b.lo.assign(scenario.dimension(), 0.0);
    b.hi.assign(scenario.dimension(), 0.0);

    for (std::size_t t = 0; t < scenario.num_periods(); ++t) {
        const PeriodInput& p = scenario.periods[t];
        const double req = thermal_requirement(p, s);

        double hi_grid = h * p.demand_electricity;
        // Enough fuel to carry the full electric load and the full thermal
        // load on the PGU alone.
        double hi_pgu = h * (s.fuel_electric_slope * p.demand_electricity +
                             s.fuel_electric_intercept + req / s.pgu_thermal_eff);
        double hi_boiler = h * req / s.boiler_eff;

        if (scenario.caps.grid) hi_grid = std::min(hi_grid, *scenario.caps.grid);
        if (scenario.caps.pgu_fuel) hi_pgu = std::min(hi_pgu, *scenario.caps.pgu_fuel);
        if (scenario.caps.boiler_fuel) hi_boiler = std::min(hi_boiler, *scenario.caps.boiler_fuel);

        if (scenario.op_case == OperatingCase::PguOff) hi_pgu = 0.0;
        if (scenario.op_case == OperatingCase::BoilerOff) hi_boiler = 0.0;

        b.hi[3 * t] = hi_grid;
        b.hi[3 * t + 1] = hi_pgu;
        b.hi[3 * t + 2] = hi_boiler;
    }
    return b;
}

void apply_case(DispatchDecision& decision, OperatingCase op_case) {
    if (op_case == OperatingCase::FullSystem) return;
    for (std::size_t t = 0; t * 3 < decision.size(); ++t) {
        if (op_case == OperatingCase::PguOff) decision[3 * t + 1] = 0.0;
        if (op_case == OperatingCase::BoilerOff) decision[3 * t + 2] = 0.0;
    }
}

const char* to_string(OperatingCase c) {
    switch (c) {
        case OperatingCase::FullSystem: return "full_system";
        case OperatingCase::PguOff: return "pgu_off";
        case OperatingCase::BoilerOff: return "boiler_off";
    }
    return "?";
}

const char* to_string(Interpretation m) {
    return m == Interpretation::Literal ? "literal" : "fuel_based";
}

}  // namespace cchp
