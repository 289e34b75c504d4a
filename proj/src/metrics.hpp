#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "moea.hpp"

namespace cchp {

using Point3 = std::array<double, 3>;

// Indicator protocol constants: fronts are min-max normalized over the
// union of everything being compared, then measured against this
// reference point; hv is rescaled by ref^3 so it lands in [0, 1].
inline constexpr double kIndicatorRef = 1.1;

struct IndicatorReport {
    double hv = 0.0;
    double spread = 0.0;
    std::size_t n_solutions = 0;
};

std::vector<Point3> objectives_of(const std::vector<Individual>& members);

// Indices of the non-dominated, deduplicated subset, ascending. Duplicate
// objective vectors keep the earliest instance.
std::vector<std::size_t> nondominated_indices(const std::vector<Point3>& pts);
std::vector<Point3> nondominated_filter(const std::vector<Point3>& pts);

// v' = (v - ideal)/(nadir - ideal), clipped to [0,1]; a degenerate axis
// maps to 0.
std::vector<Point3> normalize_front(const std::vector<Point3>& pts, const Point3& ideal,
                                    const Point3& nadir);

// Exact Lebesgue measure of the union of boxes [p, ref] (minimization).
// Points not strictly below ref contribute nothing; their count lands in
// *excluded when given.
double hypervolume(const std::vector<Point3>& pts, const Point3& ref,
                   std::size_t* excluded = nullptr);

// Monte-Carlo estimate of the same volume.
double mc_hypervolume(const std::vector<Point3>& pts, const Point3& ref, std::size_t samples,
                      std::uint64_t seed);

// Per-objective extreme member (largest value, ties to the
// lexicographically smallest point).
std::array<Point3, 3> extreme_points(const std::vector<Point3>& pts);

// Generalized spread: (sum of extreme gaps + sum |d_i - mean|) /
// (sum of extreme gaps + n * mean), d_i = nearest-neighbour distances.
// Throws on fronts smaller than 2.
double generalized_spread(const std::vector<Point3>& front, const std::array<Point3, 3>& extremes);

// Joint protocol for comparing fronts: each front is ND-filtered, all are
// normalized over their union, hv uses kIndicatorRef (scaled to [0,1]),
// spread uses the union front's extremes. Fronts with fewer than 2 points
// report spread 0.
std::vector<IndicatorReport> evaluate_indicators(const std::vector<std::vector<Point3>>& fronts);

// Feasible rank-0 subset of a population, deduplicated by objective
// vector (earliest member kept), in population order.
FrontArchive population_front(const std::vector<Individual>& pop);

// Exhaustive grid oracle over a single-period scenario: evaluate every
// grid point of the bound box, keep the feasible non-dominated set.
// Throws unless T = 1 and resolution >= 2.
FrontArchive brute_force_front(const Scenario& scenario, std::size_t resolution);

enum class Alternative { TwoSided, Greater, Less };

struct WilcoxonResult {
    std::size_t n = 0;        // pairs left after dropping zero differences
    double w_plus = 0.0;
    double w_minus = 0.0;
    double p_value = 1.0;
    bool defined = false;     // false when every difference is zero
    bool exact = false;       // enumeration (n <= 25) vs normal approximation
};

// Paired signed-rank test of a vs b. Greater tests the alternative
// "a tends to exceed b". Ties get average ranks, zero differences drop.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    Alternative alternative);

}  // namespace cchp
