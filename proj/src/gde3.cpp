#include "gde3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "metrics.hpp"
#include "rng.hpp"

namespace cchp {

void SolverParams::validate() const {
    if (pop_size < 4) throw std::invalid_argument("pop_size must be at least 4");
    if (cr < 0.0 || cr > 1.0) throw std::invalid_argument("cr must be in [0, 1]");
    if (f <= 0.0) throw std::invalid_argument("f must be positive");
    if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
}

DispatchDecision de_trial(const std::vector<Individual>& pop, std::size_t parent,
                          const SolverParams& params, const Bounds& bounds,
                          std::mt19937_64& rng) {
    const std::size_t n = pop.size();
    std::size_t r1, r2, r3;
    do r1 = pick_index(rng, n); while (r1 == parent);
    do r2 = pick_index(rng, n); while (r2 == parent || r2 == r1);
    do r3 = pick_index(rng, n); while (r3 == parent || r3 == r1 || r3 == r2);

    const DispatchDecision& x1 = pop[r1].decision;
    const DispatchDecision& x2 = pop[r2].decision;
    const DispatchDecision& x3 = pop[r3].decision;
    DispatchDecision u = pop[parent].decision;

    const std::size_t dim = u.size();
    const std::size_t j_rand = pick_index(rng, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const bool cross = uniform01(rng) < params.cr;
        if (cross || j == j_rand) {
            u[j] = std::clamp(x1[j] + params.f * (x2[j] - x3[j]), bounds.lo[j], bounds.hi[j]);
        }
    }
    return u;
}

std::vector<Individual> gde3_step(const std::vector<Individual>& pop, const Scenario& scenario,
                                  const SolverParams& params, const Bounds& bounds,
                                  std::mt19937_64& rng) {
    std::vector<Individual> pool;
    pool.reserve(2 * pop.size());

    for (std::size_t i = 0; i < pop.size(); ++i) {
        Individual trial = evaluate_individual(de_trial(pop, i, params, bounds, rng), scenario);

        if (constraint_dominates(trial, pop[i])) {
            pool.push_back(std::move(trial));
        } else if (constraint_dominates(pop[i], trial)) {
            pool.push_back(pop[i]);
        } else {
            pool.push_back(pop[i]);
            pool.push_back(std::move(trial));
        }
    }
    if (pool.size() > pop.size()) return prune(pool, pop.size());
    return pool;
}

const Individual& best_compromise(const FrontArchive& front, BcsMode mode) {
    if (front.empty()) throw std::invalid_argument("best_compromise: empty front");
    const std::vector<Individual>& members = front.members();

    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> span{1.0, 1.0, 1.0};
    if (mode == BcsMode::Normalized) {
        std::array<double, 3> hi = members.front().objectives.as_array();
        lo = hi;
        for (const Individual& m : members) {
            const auto v = m.objectives.as_array();
            for (std::size_t k = 0; k < 3; ++k) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k]);
            }
        }
        for (std::size_t k = 0; k < 3; ++k) {
            span[k] = hi[k] > lo[k] ? hi[k] - lo[k] : 1.0;
        }
    } else {
        lo = {0.0, 0.0, 0.0};
    }

    auto distance = [&](const Individual& m) {
        const auto v = m.objectives.as_array();
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            const double c = mode == BcsMode::Normalized ? (v[k] - lo[k]) / span[k] : v[k];
            s += c * c;
        }
        return std::sqrt(s);
    };

    const Individual* best = &members.front();
    double best_d = distance(*best);
    for (const Individual& m : members) {
        const double d = distance(m);
        if (d < best_d || (d == best_d && m.objectives.as_array() < best->objectives.as_array())) {
            best = &m;
            best_d = d;
        }
    }
    return *best;
}

SolveResult run_gde3(const Scenario& scenario, const SolverParams& params) {
    scenario.validate();
    params.validate();

    const Bounds bounds = decision_bounds(scenario);
    const std::size_t dim = scenario.dimension();
    std::mt19937_64 rng(params.seed);

    std::vector<Individual> pop;
    pop.reserve(params.pop_size);
    for (std::size_t i = 0; i < params.pop_size; ++i) {
        DispatchDecision d(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            d[j] = uniform_in(rng, bounds.lo[j], bounds.hi[j]);
        }
        pop.push_back(evaluate_individual(std::move(d), scenario));
    }

    SolveResult res;

    auto snapshot = [&](std::size_t iter, const std::vector<Individual>& p) {
        IterationStats st;
        st.iteration = iter;
        st.front_size = population_front(p).size();
        st.least_violation = std::numeric_limits<double>::infinity();
        for (const Individual& ind : p) {
            if (ind.feasible()) ++st.feasible_count;
            st.least_violation = std::min(st.least_violation, ind.violation.total);
        }
        res.telemetry.push_back(st);
    };
    snapshot(0, pop);

    for (std::size_t t = 1; t <= params.max_iters; ++t) {
        pop = gde3_step(pop, scenario, params, bounds, rng);
        snapshot(t, pop);
    }

    res.front = population_front(pop);
    res.feasible = !res.front.empty();
    if (res.feasible) {
        res.best_compromise = best_compromise(res.front, params.bcs_mode);
    } else {
        const Individual* least = &pop.front();
        for (const Individual& ind : pop) {
            if (ind.violation.total < least->violation.total) least = &ind;
        }
        res.best_compromise = *least;
    }
    res.population = std::move(pop);
    return res;
}

const char* to_string(BcsMode m) { return m == BcsMode::Raw ? "raw" : "normalized"; }

}  // namespace cchp
