#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cchp {

// One scheduling period. Demands are energy per period (kWh), prices are
// currency per kWh. duration_h is descriptive metadata; demands are already
// integrated over the period.
struct PeriodInput {
    double duration_h = 1.0;
    double demand_electricity = 0.0;
    double demand_cooling = 0.0;
    double demand_heating = 0.0;
    double price_electricity = 0.0;
    double price_gas = 0.0;
};

// Plant-wide conversion parameters. The PGU consumes
// fuel = slope * electricity + intercept (kWh fuel for kWh electric output)
// and recovers pgu_thermal_eff of its fuel input as usable heat.
struct SystemParams {
    double fuel_electric_slope = 2.67;
    double fuel_electric_intercept = 11.43;
    double pgu_thermal_eff = 0.51;
    double boiler_eff = 0.90;
    double cooling_eff = 0.70;
    double heating_eff = 0.85;
    double pec_electricity = 3.336;  // site-to-primary conversion, grid electricity
    double pec_gas = 1.047;          // site-to-primary conversion, natural gas
    double cde_electricity = 203.74; // g CO2 per kWh grid electricity
    double cde_gas = 200.0;          // g CO2 per kWh gas
};

// Dispatch strategy: full plant, PGU shut down, or boiler shut down.
enum class OperatingCase { FullSystem = 1, PguOff = 2, BoilerOff = 3 };

// Accounting basis for the PGU terms of the cost and emission objectives.
// Literal prices the PGU by its electric output, FuelBased by its fuel
// input. Primary energy is fuel-based in both modes.
enum class Interpretation { Literal, FuelBased };

// Optional hard capacity limits applied on top of the demand-implied
// bounds, uniform across periods.
struct VariableCaps {
    std::optional<double> grid;
    std::optional<double> pgu_fuel;
    std::optional<double> boiler_fuel;
};

struct Scenario {
    std::string name;
    std::vector<PeriodInput> periods;
    SystemParams params;
    OperatingCase op_case = OperatingCase::FullSystem;
    Interpretation interpretation = Interpretation::Literal;
    double bound_headroom = 1.5;
    // Gas-to-cold / gas-to-heat efficiency of the conventional system used
    // as the improvement baseline. Defaults to the boiler chained with the
    // cooling/heating component.
    std::optional<double> reference_cooling_chain;
    std::optional<double> reference_heating_chain;
    VariableCaps caps;

    std::size_t num_periods() const { return periods.size(); }
    std::size_t dimension() const { return 3 * periods.size(); }
    double reference_cooling_eff() const;
    double reference_heating_eff() const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Flattened decision vector, three entries per period:
// [grid kWh, PGU fuel kWh, boiler fuel kWh] * T.
using DispatchDecision = std::vector<double>;

inline double grid_of(const DispatchDecision& d, std::size_t t) { return d[3 * t]; }
inline double pgu_fuel_of(const DispatchDecision& d, std::size_t t) { return d[3 * t + 1]; }
inline double boiler_fuel_of(const DispatchDecision& d, std::size_t t) { return d[3 * t + 2]; }

struct ObjectiveVector {
    double cost = 0.0;
    double pec = 0.0;
    double cde = 0.0;

    std::array<double, 3> as_array() const { return {cost, pec, cde}; }
};

struct ViolationMeasure {
    double electric_deficit = 0.0;
    double heat_deficit = 0.0;
    double total = 0.0;

    bool feasible() const { return total == 0.0; }
};

// Conversion-stage energy flows of one period, before demands are applied.
struct PeriodState {
    double e_pgu = 0.0;      // PGU electric output
    double q_rcv = 0.0;      // heat recovered from the PGU
    double q_boiler = 0.0;   // boiler heat output
    double heat_pool = 0.0;  // q_rcv + q_boiler
    double e_supply = 0.0;   // grid + e_pgu
    double loss_pgu = 0.0;
    double loss_boiler = 0.0;
    double loss_total = 0.0; // conversion losses known at this stage
};

// Full demand-resolved flows of one period. The thermal pool is split into
// exactly the cooling/heating component inputs the demands require;
// anything beyond that is surplus.
struct PeriodFlows {
    PeriodState state;
    double thermal_to_cooling = 0.0;
    double thermal_to_heating = 0.0;
    double cooling_out = 0.0;
    double heating_out = 0.0;
    double loss_cooling = 0.0;
    double loss_heating = 0.0;
    double surplus_heat = 0.0;
    double excess_electricity = 0.0;
    double served_electricity = 0.0;
    double electric_deficit = 0.0;
    double heat_deficit = 0.0;
    double loss_total = 0.0; // all four component losses
};

// Derive conversion flows from one period's decision.
PeriodState derive_state(double grid, double pgu_fuel, double boiler_fuel,
                         const SystemParams& params);

PeriodFlows resolve_flows(double grid, double pgu_fuel, double boiler_fuel,
                          const PeriodInput& period, const SystemParams& params);

// Cost / primary-energy / emission triple of a decision. Throws on
// dimension mismatch.
ObjectiveVector eval_objectives(const DispatchDecision& decision, const Scenario& scenario);

// Aggregate unmet-demand measure; zero iff the decision is feasible.
ViolationMeasure violation(const DispatchDecision& decision, const Scenario& scenario);

// Objectives of the no-plant baseline: all electricity from the grid, all
// thermal demand served by gas through the reference chain.
ObjectiveVector reference_objectives(const Scenario& scenario);

// Percentage reduction of each objective relative to the reference.
// Throws when a reference component is zero.
std::array<double, 3> improvement_rate(const ObjectiveVector& ref, const ObjectiveVector& val);

struct Bounds {
    std::vector<double> lo;
    std::vector<double> hi;
};

// Demand-implied box bounds for all 3*T variables. Case-disabled variables
// get [0, 0].
Bounds decision_bounds(const Scenario& scenario);

// Zero the variables disabled by the operating case, leave the rest alone.
void apply_case(DispatchDecision& decision, OperatingCase op_case);

const char* to_string(OperatingCase c);
const char* to_string(Interpretation m);

}  // namespace cchp
