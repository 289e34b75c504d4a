#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "metrics.hpp"

using namespace cchp;

namespace {

// Independent HV oracle: coordinate-cell decomposition. A cell counts when
// its lower corner is weakly dominated by some front point.
double cell_hv(const std::vector<Point3>& pts, const Point3& ref) {
    std::array<std::vector<double>, 3> grid;
    for (std::size_t m = 0; m < 3; ++m) {
        for (const Point3& p : pts) grid[m].push_back(p[m]);
        grid[m].push_back(ref[m]);
        std::sort(grid[m].begin(), grid[m].end());
        grid[m].erase(std::unique(grid[m].begin(), grid[m].end()), grid[m].end());
    }
    double vol = 0.0;
    for (std::size_t i = 0; i + 1 < grid[0].size(); ++i) {
        for (std::size_t j = 0; j + 1 < grid[1].size(); ++j) {
            for (std::size_t k = 0; k + 1 < grid[2].size(); ++k) {
                const Point3 corner{grid[0][i], grid[1][j], grid[2][k]};
                bool covered = false;
                for (const Point3& p : pts) {
                    if (p[0] <= corner[0] && p[1] <= corner[1] && p[2] <= corner[2]) {
                        covered = true;
                        break;
                    }
                }
                if (covered) {
                    vol += (grid[0][i + 1] - grid[0][i]) * (grid[1][j + 1] - grid[1][j]) *
                           (grid[2][k + 1] - grid[2][k]);
                }
            }
        }
    }
    return vol;
}

std::vector<Point3> random_front(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng), u(rng)});
    return pts;
}

}  // namespace

TEST_CASE("hypervolume oracle values") {
    const Point3 ref{1.0, 1.0, 1.0};

    CHECK(hypervolume({{0.5, 0.5, 0.5}}, ref) == 0.125);

    const double two_box = hypervolume({{0.2, 0.8, 0.8}, {0.8, 0.2, 0.2}}, ref);
    CHECK(two_box == doctest::Approx(0.152).epsilon(1e-13));

    CHECK(hypervolume({}, ref) == 0.0);
}

TEST_CASE("hypervolume ignores duplicates and dominated points") {
    const Point3 ref{1.0, 1.0, 1.0};
    const std::vector<Point3> base = {{0.2, 0.8, 0.8}, {0.8, 0.2, 0.2}};
    const double hv = hypervolume(base, ref);

    std::vector<Point3> with_dup = base;
    with_dup.push_back(base[0]);
    CHECK(hypervolume(with_dup, ref) == doctest::Approx(hv).epsilon(1e-13));

    std::vector<Point3> with_dom = base;
    with_dom.push_back({0.9, 0.9, 0.9});
    CHECK(hypervolume(with_dom, ref) == doctest::Approx(hv).epsilon(1e-13));

    std::vector<Point3> with_new = base;
    with_new.push_back({0.1, 0.1, 0.9});
    CHECK(hypervolume(with_new, ref) > hv);
}

TEST_CASE("hypervolume excludes points outside the reference box") {
    const Point3 ref{1.0, 1.0, 1.0};
    std::size_t excluded = 0;
    const double hv = hypervolume({{0.5, 0.5, 0.5}, {0.4, 1.2, 0.4}}, ref, &excluded);
    CHECK(hv == 0.125);
    CHECK(excluded == 1);
}

TEST_CASE("hypervolume matches the cell-decomposition oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pts = random_front(rng, 2 + rng() % 9);
        const Point3 ref{1.0, 1.0, 1.0};
        CHECK(hypervolume(pts, ref) == doctest::Approx(cell_hv(pts, ref)).epsilon(1e-12));
    }
}

TEST_CASE("monte-carlo hypervolume tracks the exact value") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 4; ++trial) {
        const auto pts = random_front(rng, 10);
        const Point3 ref{1.0, 1.0, 1.0};
        const double exact = hypervolume(pts, ref);
        const double mc = mc_hypervolume(pts, ref, 200000, 1000 + trial);
        CHECK(std::abs(mc - exact) < 0.01);
    }
}

TEST_CASE("normalize_front") {
    const Point3 ideal{0.0, 10.0, -5.0};
    const Point3 nadir{2.0, 20.0, 5.0};

    auto out = normalize_front({ideal, nadir, {1.0, 15.0, 0.0}, {-3.0, 30.0, 2.0}}, ideal, nadir);
    CHECK(out[0] == Point3{0.0, 0.0, 0.0});
    CHECK(out[1] == Point3{1.0, 1.0, 1.0});
    CHECK(out[2][0] == doctest::Approx(0.5));
    CHECK(out[2][1] == doctest::Approx(0.5));
    CHECK(out[2][2] == doctest::Approx(0.5));
    CHECK(out[3][0] == 0.0);  // clipped below
    CHECK(out[3][1] == 1.0);  // clipped above

    auto degenerate = normalize_front({{1.0, 3.0, 4.0}}, {0.0, 3.0, 0.0}, {2.0, 3.0, 8.0});
    CHECK(degenerate[0][1] == 0.0);
}

TEST_CASE("nondominated filter matches a pairwise oracle") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> v(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Point3> pts;
        const std::size_t n = 2 + rng() % 39;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({double(v(rng)), double(v(rng)), double(v(rng))});
        }

        std::vector<std::size_t> want;
        for (std::size_t i = 0; i < n; ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < n && !drop; ++j) {
                if (j == i) continue;
                const bool weak = pts[j][0] <= pts[i][0] && pts[j][1] <= pts[i][1] &&
                                  pts[j][2] <= pts[i][2];
                const bool strict = weak && pts[j] != pts[i];
                drop = strict || (weak && pts[j] == pts[i] && j < i);
            }
            if (!drop) want.push_back(i);
        }
        CHECK(nondominated_indices(pts) == want);
    }
}

TEST_CASE("extreme points pick the per-objective maxima") {
    const std::vector<Point3> pts = {{0.0, 1.0, 0.5}, {1.0, 0.0, 0.5}, {0.5, 0.5, 1.0}};
    const auto ext = extreme_points(pts);
    CHECK(ext[0] == Point3{1.0, 0.0, 0.5});
    CHECK(ext[1] == Point3{0.0, 1.0, 0.5});
    CHECK(ext[2] == Point3{0.5, 0.5, 1.0});
    CHECK_THROWS_AS(extreme_points({}), std::invalid_argument);
}

TEST_CASE("generalized spread") {
    SUBCASE("uniform front matching the extremes scores zero") {
        std::vector<Point3> front;
        for (int i = 0; i < 5; ++i) {
            front.push_back({double(i), 4.0 - double(i), 0.0});
        }
        const auto ext = extreme_points(front);
        CHECK(generalized_spread(front, ext) == doctest::Approx(0.0).epsilon(1e-12));
    }

    SUBCASE("coincident pair is judged by the extreme gaps alone") {
        const std::vector<Point3> front = {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
        const std::array<Point3, 3> ext = {Point3{3.0, 1.0, 1.0}, Point3{1.0, 3.0, 1.0},
                                           Point3{1.0, 1.0, 3.0}};
        CHECK(generalized_spread(front, ext) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("an outlier strictly increases the score") {
        std::vector<Point3> front;
        for (int i = 0; i < 6; ++i) front.push_back({double(i), 5.0 - double(i), 0.0});
        const auto ext = extreme_points(front);
        const double base = generalized_spread(front, ext);

        front.push_back({100.0, -95.0, 0.0});
        CHECK(generalized_spread(front, ext) > base);
    }

    SUBCASE("singleton throws") {
        CHECK_THROWS_AS(generalized_spread({{1.0, 1.0, 1.0}}, std::array<Point3, 3>{}),
                        std::invalid_argument);
    }
}

TEST_CASE("joint indicator protocol") {
    // A sits strictly inside B's dominated region, so A must win on hv.
    std::vector<Point3> a, b;
    for (int i = 0; i <= 10; ++i) {
        const double t = double(i) / 10.0;
        a.push_back({100.0 * t, 100.0 * (1.0 - t), 50.0 * t * (1.0 - t)});
        b.push_back({100.0 * t + 30.0, 100.0 * (1.0 - t) + 30.0, 50.0 * t * (1.0 - t) + 30.0});
    }
    auto reports = evaluate_indicators({a, b});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].hv > reports[1].hv);
    CHECK(reports[0].hv <= 1.0);
    CHECK(reports[0].n_solutions == 11);

    SUBCASE("dominated duplicates change nothing") {
        std::vector<Point3> a_noisy = a;
        a_noisy.push_back(a[3]);
        a_noisy.push_back({999.0, 999.0, 999.0});
        auto noisy = evaluate_indicators({a_noisy, b});
        CHECK(noisy[0].hv == doctest::Approx(reports[0].hv).epsilon(1e-13));
        CHECK(noisy[0].spread == doctest::Approx(reports[0].spread).epsilon(1e-13));
        CHECK(noisy[0].n_solutions == reports[0].n_solutions);
    }

    SUBCASE("singleton front reports spread zero") {
        auto r = evaluate_indicators({{{1.0, 1.0, 1.0}}, a});
        CHECK(r[0].spread == 0.0);
        CHECK(r[0].n_solutions == 1);
    }
}

TEST_CASE("brute force front") {
    SUBCASE("zero demands collapse to the origin") {
        Scenario sc;
        PeriodInput p;
        p.price_electricity = 0.5;
        p.price_gas = 0.22;
        sc.periods.push_back(p);
        FrontArchive front = brute_force_front(sc, 8);
        REQUIRE(front.size() == 1);
        CHECK(front.members()[0].objectives.cost == 0.0);
        CHECK(front.members()[0].objectives.pec == 0.0);
        CHECK(front.members()[0].objectives.cde == 0.0);
        CHECK(front.members()[0].decision == DispatchDecision{0.0, 0.0, 0.0});
    }

    SUBCASE("corner resolution equals direct corner enumeration") {
        Scenario sc;
        PeriodInput p;
        p.demand_electricity = 100.0;
        p.demand_cooling = 70.0;
        p.demand_heating = 0.0;
        p.price_electricity = 0.65;
        p.price_gas = 0.22;
        sc.periods.push_back(p);

        FrontArchive front = brute_force_front(sc, 2);

        const Bounds b = decision_bounds(sc);
        std::vector<Individual> corners;
        for (double x1 : {b.lo[0], b.hi[0]}) {
            for (double x2 : {b.lo[1], b.hi[1]}) {
                for (double x3 : {b.lo[2], b.hi[2]}) {
                    Individual ind = evaluate_individual({x1, x2, x3}, sc);
                    if (ind.feasible()) corners.push_back(ind);
                }
            }
        }
        std::vector<Individual> want;
        for (std::size_t i : nondominated_indices(objectives_of(corners))) {
            want.push_back(corners[i]);
        }
        REQUIRE(front.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(front.members()[i].decision == want[i].decision);
        }
    }

    SUBCASE("front members are feasible and mutually non-dominated") {
        Scenario sc;
        PeriodInput p;
        p.demand_electricity = 200.0;
        p.demand_cooling = 140.0;
        p.demand_heating = 170.0;
        p.price_electricity = 0.65;
        p.price_gas = 0.22;
        sc.periods.push_back(p);

        FrontArchive front = brute_force_front(sc, 32);
        CHECK(front.size() >= 2);
        for (const Individual& m : front.members()) {
            CHECK(m.feasible());
            for (const Individual& o : front.members()) {
                if (&m != &o) CHECK_FALSE(dominates(m, o));
            }
        }
    }

    SUBCASE("multi-period scenarios are rejected") {
        Scenario sc;
        PeriodInput p;
        p.demand_electricity = 1.0;
        p.price_electricity = 0.5;
        p.price_gas = 0.22;
        sc.periods.push_back(p);
        sc.periods.push_back(p);
        CHECK_THROWS_AS(brute_force_front(sc, 4), std::invalid_argument);
    }
}

TEST_CASE("wilcoxon signed-rank") {
    SUBCASE("five positive differences") {
        const std::vector<double> a = {1.0, 2.0, 3.0, 4.0, 5.0};
        const std::vector<double> b = {0.0, 0.0, 0.0, 0.0, 0.0};
        auto res = wilcoxon_signed_rank(a, b, Alternative::Greater);
        CHECK(res.defined);
        CHECK(res.exact);
        CHECK(res.n == 5);
        CHECK(res.w_minus == 0.0);
        CHECK(res.w_plus == 15.0);
        CHECK(res.p_value == 0.03125);

        auto less = wilcoxon_signed_rank(a, b, Alternative::Less);
        CHECK(less.p_value == 1.0);
    }

    SUBCASE("twenty positive differences") {
        std::vector<double> a(20), b(20, 0.0);
        for (int i = 0; i < 20; ++i) a[i] = double(i + 1);
        auto res = wilcoxon_signed_rank(a, b, Alternative::Greater);
        CHECK(res.p_value == doctest::Approx(std::pow(2.0, -20.0)).epsilon(1e-12));
        CHECK(res.p_value < 0.001);
    }

    SUBCASE("perfect antisymmetry is a wash") {
        const std::vector<double> a = {1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
        const std::vector<double> b(6, 0.0);
        auto res = wilcoxon_signed_rank(a, b, Alternative::TwoSided);
        CHECK(res.w_plus == res.w_minus);
        CHECK(res.p_value == 1.0);
    }

    SUBCASE("zero differences drop out") {
        const std::vector<double> a = {5.0, 1.0, 2.0, 3.0, 4.0, 5.0};
        const std::vector<double> b = {5.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        auto res = wilcoxon_signed_rank(a, b, Alternative::Greater);
        CHECK(res.n == 5);
        CHECK(res.p_value == 0.03125);
    }

    SUBCASE("identical samples are undefined") {
        const std::vector<double> a = {1.0, 2.0};
        auto res = wilcoxon_signed_rank(a, a, Alternative::TwoSided);
        CHECK_FALSE(res.defined);
        CHECK(std::isnan(res.p_value));
    }

    SUBCASE("ties get average ranks") {
        const std::vector<double> a = {1.0, 1.0, -1.0};
        const std::vector<double> b(3, 0.0);
        auto res = wilcoxon_signed_rank(a, b, Alternative::Greater);
        CHECK(res.w_plus == 4.0);
        CHECK(res.w_minus == 2.0);
    }

    SUBCASE("exact agrees with the normal approximation at n = 25") {
        std::mt19937_64 rng(777);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> a(25), b(25, 0.0);
            for (double& x : a) x = u(rng) + 0.2;
            auto res = wilcoxon_signed_rank(a, b, Alternative::Greater);
            REQUIRE(res.exact);

            const double n = double(res.n);
            const double mean = n * (n + 1.0) / 4.0;
            const double sd = std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / 24.0);
            const double approx = 0.5 * std::erfc(-((res.w_minus - mean + 0.5) / sd) / std::sqrt(2.0));
            CHECK(std::abs(res.p_value - approx) < 0.01);
        }
    }

    SUBCASE("mismatched sizes throw") {
        CHECK_THROWS_AS(wilcoxon_signed_rank({1.0}, {1.0, 2.0}, Alternative::TwoSided),
                        std::invalid_argument);
    }
}
