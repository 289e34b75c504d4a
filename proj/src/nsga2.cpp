#include "nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metrics.hpp"
#include "rng.hpp"

namespace cchp {

void Nsga2Params::validate() const {
    if (pop_size < 4 || pop_size % 2 != 0) {
        throw std::invalid_argument("pop_size must be even and at least 4");
    }
    if (max_gens == 0) throw std::invalid_argument("max_gens must be positive");
    if (crossover_prob < 0.0 || crossover_prob > 1.0) {
        throw std::invalid_argument("crossover_prob must be in [0, 1]");
    }
    if (mutation_prob && (*mutation_prob < 0.0 || *mutation_prob > 1.0)) {
        throw std::invalid_argument("mutation_prob must be in [0, 1]");
    }
    if (crossover_dist_index <= 0.0) {
        throw std::invalid_argument("crossover_dist_index must be positive");
    }
    if (mutation_dist_index <= 0.0) {
        throw std::invalid_argument("mutation_dist_index must be positive");
    }
}

std::pair<DispatchDecision, DispatchDecision> sbx_crossover(const DispatchDecision& p1,
                                                            const DispatchDecision& p2,
                                                            const Nsga2Params& params,
                                                            const Bounds& bounds,
                                                            std::mt19937_64& rng) {
    DispatchDecision c1 = p1;
    DispatchDecision c2 = p2;
    if (uniform01(rng) >= params.crossover_prob) return {std::move(c1), std::move(c2)};

    const double eta = params.crossover_dist_index;
    for (std::size_t j = 0; j < p1.size(); ++j) {
        const double y1 = std::min(p1[j], p2[j]);
        const double y2 = std::max(p1[j], p2[j]);
        if (y2 - y1 <= 1e-14) continue;

        const double lo = bounds.lo[j];
        const double hi = bounds.hi[j];
        const double u = uniform01(rng);
        auto contracted = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
            if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
            return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        };

        const double beta_lo = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
        const double beta_hi = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
        double a = std::clamp(0.5 * (y1 + y2 - contracted(beta_lo) * (y2 - y1)), lo, hi);
        double b = std::clamp(0.5 * (y1 + y2 + contracted(beta_hi) * (y2 - y1)), lo, hi);
        if (uniform01(rng) <= 0.5) std::swap(a, b);
        c1[j] = a;
        c2[j] = b;
    }
    return {std::move(c1), std::move(c2)};
}

DispatchDecision polynomial_mutation(DispatchDecision x, double mutation_prob,
                                     const Nsga2Params& params, const Bounds& bounds,
                                     std::mt19937_64& rng) {
    const double eta = params.mutation_dist_index;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double lo = bounds.lo[j];
        const double hi = bounds.hi[j];
        if (hi <= lo) continue;
        if (uniform01(rng) >= mutation_prob) continue;

        const double span = hi - lo;
        const double u = uniform01(rng);
        double dq;
        if (u <= 0.5) {
            const double xy = 1.0 - (x[j] - lo) / span;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            dq = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
        } else {
            const double xy = 1.0 - (hi - x[j]) / span;
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            dq = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
        }
        x[j] = std::clamp(x[j] + dq * span, lo, hi);
    }
    return x;
}

namespace {

struct RankedPop {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

RankedPop rank_population(const std::vector<Individual>& pop) {
    RankedPop out;
    out.rank.assign(pop.size(), 0);
    out.crowding.assign(pop.size(), 0.0);
    const auto fronts = fast_nondominated_sort(pop);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        const auto cd = crowding_distance(pop, fronts[r]);
        for (std::size_t k = 0; k < fronts[r].size(); ++k) {
            out.rank[fronts[r][k]] = r;
            out.crowding[fronts[r][k]] = cd[k];
        }
    }
    return out;
}

}  // namespace

FrontArchive run_nsga2(const Scenario& scenario, const Nsga2Params& params) {
    scenario.validate();
    params.validate();

    const Bounds bounds = decision_bounds(scenario);
    const std::size_t dim = scenario.dimension();
    const double pm = params.mutation_prob ? *params.mutation_prob : 1.0 / double(dim);
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

    for (std::size_t gen = 0; gen < params.max_gens; ++gen) {
        const RankedPop ranked = rank_population(pop);
        auto pick_parent = [&]() -> const Individual& {
            const std::size_t i = pick_index(rng, pop.size());
            const std::size_t j = pick_index(rng, pop.size());
            if (constraint_dominates(pop[i], pop[j])) return pop[i];
            if (constraint_dominates(pop[j], pop[i])) return pop[j];
            if (ranked.rank[i] != ranked.rank[j]) {
                return ranked.rank[i] < ranked.rank[j] ? pop[i] : pop[j];
            }
            if (ranked.crowding[i] != ranked.crowding[j]) {
                return ranked.crowding[i] > ranked.crowding[j] ? pop[i] : pop[j];
            }
            return pop[i];
        };

        std::vector<Individual> pool = pop;
        pool.reserve(2 * params.pop_size);
        for (std::size_t k = 0; k < params.pop_size / 2; ++k) {
            const Individual& pa = pick_parent();
            const Individual& pb = pick_parent();
            auto [ca, cb] = sbx_crossover(pa.decision, pb.decision, params, bounds, rng);
            ca = polynomial_mutation(std::move(ca), pm, params, bounds, rng);
            cb = polynomial_mutation(std::move(cb), pm, params, bounds, rng);
            pool.push_back(evaluate_individual(std::move(ca), scenario));
            pool.push_back(evaluate_individual(std::move(cb), scenario));
        }
        pop = prune(pool, params.pop_size);
    }

    return population_front(pop);
}

}  // namespace cchp
