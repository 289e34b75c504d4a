#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "nsga2.hpp"
#include "rng.hpp"

using namespace cchp;

namespace {

Scenario small_scenario() {
    Scenario sc;
    sc.name = "small";
    PeriodInput p;
    p.demand_electricity = 200.0;
    p.demand_cooling = 140.0;
    p.demand_heating = 170.0;
    p.price_electricity = 0.65;
    p.price_gas = 0.22;
    sc.periods.push_back(p);
    return sc;
}

Scenario zero_demand_scenario(Interpretation mode) {
    Scenario sc;
    sc.name = "idle";
    sc.interpretation = mode;
    PeriodInput p;
    p.price_electricity = 0.5;
    p.price_gas = 0.22;
    sc.periods.push_back(p);
    return sc;
}

Bounds unit_box() {
    Bounds b;
    b.lo = {0.0, 0.0, 0.0};
    b.hi = {100.0, 100.0, 100.0};
    return b;
}

bool same_front(const FrontArchive& a, const FrontArchive& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.members()[i].decision != b.members()[i].decision) return false;
        if (a.members()[i].objectives.as_array() != b.members()[i].objectives.as_array()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("nsga2 params validation") {
    Nsga2Params ok;
    CHECK_NOTHROW(ok.validate());

    Nsga2Params bad = ok;
    bad.pop_size = 101;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = ok;
    bad.pop_size = 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = ok;
    bad.crossover_prob = 1.2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = ok;
    bad.mutation_prob = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = ok;
    bad.crossover_dist_index = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = ok;
    bad.mutation_dist_index = -5.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sbx crossover") {
    const Bounds b = unit_box();
    Nsga2Params params;
    params.crossover_prob = 1.0;
    std::mt19937_64 rng(31);

    SUBCASE("identical parents give identical children") {
        const DispatchDecision p = {25.0, 50.0, 75.0};
        for (int k = 0; k < 50; ++k) {
            const auto [c1, c2] = sbx_crossover(p, p, params, b, rng);
            CHECK(c1 == p);
            CHECK(c2 == p);
        }
    }

    SUBCASE("zero crossover probability copies the parents") {
        Nsga2Params off = params;
        off.crossover_prob = 0.0;
        const DispatchDecision p1 = {10.0, 20.0, 30.0};
        const DispatchDecision p2 = {90.0, 80.0, 70.0};
        for (int k = 0; k < 50; ++k) {
            const auto [c1, c2] = sbx_crossover(p1, p2, off, b, rng);
            CHECK(c1 == p1);
            CHECK(c2 == p2);
        }
    }

    SUBCASE("coordinates where the parents agree are left alone") {
        const DispatchDecision p1 = {40.0, 55.0, 10.0};
        const DispatchDecision p2 = {40.0, 55.0, 90.0};
        for (int k = 0; k < 100; ++k) {
            const auto [c1, c2] = sbx_crossover(p1, p2, params, b, rng);
            CHECK(c1[0] == 40.0);
            CHECK(c2[0] == 40.0);
            CHECK(c1[1] == 55.0);
            CHECK(c2[1] == 55.0);
        }
    }

    SUBCASE("children stay inside the bounds") {
        const DispatchDecision p1 = {0.0, 99.5, 1.0};
        const DispatchDecision p2 = {100.0, 100.0, 0.5};
        for (int k = 0; k < 2000; ++k) {
            const auto [c1, c2] = sbx_crossover(p1, p2, params, b, rng);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(c1[j] >= b.lo[j]);
                CHECK(c1[j] <= b.hi[j]);
                CHECK(c2[j] >= b.lo[j]);
                CHECK(c2[j] <= b.hi[j]);
            }
        }
    }

    SUBCASE("child mean matches the parent midpoint") {
        const DispatchDecision p1 = {40.0, 40.0, 40.0};
        const DispatchDecision p2 = {60.0, 60.0, 60.0};
        const int n = 10000;
        double sum = 0.0, sumsq = 0.0;
        for (int k = 0; k < n; ++k) {
            const auto [c1, c2] = sbx_crossover(p1, p2, params, b, rng);
            sum += c1[0];
            sumsq += c1[0] * c1[0];
        }
        const double mean = sum / n;
        const double var = (sumsq - n * mean * mean) / (n - 1);
        const double sigma_mean = std::sqrt(var / n);
        CHECK(sigma_mean > 0.0);
        CHECK(std::abs(mean - 50.0) < 3.0 * sigma_mean);
    }
}

TEST_CASE("polynomial mutation") {
    const Bounds b = unit_box();
    Nsga2Params params;
    std::mt19937_64 rng(77);

    SUBCASE("zero probability is the identity") {
        const DispatchDecision x = {12.5, 0.0, 100.0};
        for (int k = 0; k < 50; ++k) {
            CHECK(polynomial_mutation(x, 0.0, params, b, rng) == x);
        }
    }

    SUBCASE("results stay inside the bounds") {
        for (const double start : {0.0, 100.0, 37.0}) {
            const DispatchDecision x = {start, start, start};
            for (int k = 0; k < 2000; ++k) {
                const DispatchDecision y = polynomial_mutation(x, 1.0, params, b, rng);
                for (std::size_t j = 0; j < 3; ++j) {
                    CHECK(y[j] >= b.lo[j]);
                    CHECK(y[j] <= b.hi[j]);
                }
            }
        }
    }

    SUBCASE("a chained walk never escapes the box") {
        DispatchDecision x = {50.0, 50.0, 50.0};
        for (int k = 0; k < 2000; ++k) {
            x = polynomial_mutation(std::move(x), 0.5, params, b, rng);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(x[j] >= b.lo[j]);
                CHECK(x[j] <= b.hi[j]);
            }
        }
    }

    SUBCASE("degenerate coordinates are untouched") {
        Bounds pinned = b;
        pinned.lo[1] = 0.0;
        pinned.hi[1] = 0.0;
        const DispatchDecision x = {50.0, 0.0, 50.0};
        for (int k = 0; k < 200; ++k) {
            CHECK(polynomial_mutation(x, 1.0, params, pinned, rng)[1] == 0.0);
        }
    }

    SUBCASE("a larger distribution index concentrates around the input") {
        const DispatchDecision x = {50.0, 50.0, 50.0};
        auto mean_shift = [&](double eta) {
            Nsga2Params p = params;
            p.mutation_dist_index = eta;
            double total = 0.0;
            const int n = 4000;
            for (int k = 0; k < n; ++k) {
                total += std::abs(polynomial_mutation(x, 1.0, p, b, rng)[0] - 50.0);
            }
            return total / n;
        };
        const double wide = mean_shift(2.0);
        const double tight = mean_shift(200.0);
        CHECK(tight < wide);
        CHECK(tight < 1.0);
    }
}

TEST_CASE("nsga2 run on the idle scenario") {
    Nsga2Params params;
    params.pop_size = 40;
    params.max_gens = 120;
    params.seed = 5;

    SUBCASE("literal interpretation collapses to the do-nothing point") {
        const FrontArchive front = run_nsga2(zero_demand_scenario(Interpretation::Literal), params);
        REQUIRE(front.size() == 1);
        const Individual& m = front.members().front();
        CHECK(m.objectives.cost == 0.0);
        CHECK(m.objectives.pec == 0.0);
        CHECK(m.objectives.cde == 0.0);
        CHECK(m.decision[0] == 0.0);
        CHECK(m.decision[2] == 0.0);
        CHECK(m.violation.total == 0.0);
    }

    SUBCASE("fuel-based interpretation drives the fuel draw toward zero") {
        const FrontArchive front =
            run_nsga2(zero_demand_scenario(Interpretation::FuelBased), params);
        REQUIRE(front.size() == 1);
        const Individual& m = front.members().front();
        CHECK(m.decision[0] == 0.0);
        CHECK(m.decision[1] < 1e-2);
        CHECK(m.decision[2] == 0.0);
        CHECK(m.objectives.cost < 1e-2);
    }
}

TEST_CASE("nsga2 run on a one-period plant") {
    Nsga2Params params;
    params.pop_size = 60;
    params.max_gens = 80;
    params.seed = 11;
    const Scenario sc = small_scenario();
    const Bounds b = decision_bounds(sc);
    const FrontArchive front = run_nsga2(sc, params);

    REQUIRE(front.size() >= 2);
    for (const Individual& m : front.members()) {
        CHECK(m.feasible());
        for (std::size_t j = 0; j < m.decision.size(); ++j) {
            CHECK(m.decision[j] >= b.lo[j]);
            CHECK(m.decision[j] <= b.hi[j]);
        }
    }
    for (std::size_t i = 0; i < front.size(); ++i) {
        for (std::size_t k = 0; k < front.size(); ++k) {
            if (i == k) continue;
            CHECK_FALSE(dominates(front.members()[i].objectives, front.members()[k].objectives));
        }
    }
}

TEST_CASE("nsga2 respects the operating case projection") {
    Nsga2Params params;
    params.pop_size = 24;
    params.max_gens = 30;
    params.seed = 2;
    Scenario sc = small_scenario();
    sc.op_case = OperatingCase::PguOff;
    const FrontArchive front = run_nsga2(sc, params);
    REQUIRE_FALSE(front.empty());
    for (const Individual& m : front.members()) {
        CHECK(pgu_fuel_of(m.decision, 0) == 0.0);
    }
}

TEST_CASE("nsga2 is deterministic for a fixed seed") {
    Nsga2Params params;
    params.pop_size = 32;
    params.max_gens = 40;
    params.seed = 1234;
    const Scenario sc = small_scenario();

    const FrontArchive a = run_nsga2(sc, params);
    const FrontArchive b = run_nsga2(sc, params);
    CHECK(same_front(a, b));

    params.seed = 4321;
    const FrontArchive c = run_nsga2(sc, params);
    CHECK_FALSE(same_front(a, c));
}
