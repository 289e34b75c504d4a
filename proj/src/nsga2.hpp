#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "moea.hpp"

namespace cchp {

struct Nsga2Params {
    std::size_t pop_size = 100;
    std::size_t max_gens = 250;
    double crossover_prob = 0.9;
    double crossover_dist_index = 20.0;
    // Defaults to 1/dimension at run time when unset.
    std::optional<double> mutation_prob;
    double mutation_dist_index = 20.0;
    std::uint64_t seed = 1;

    // Throws std::invalid_argument: pop_size even and >= 4, probabilities
    // in [0, 1], distribution indices > 0.
    void validate() const;
};

// Bounded simulated binary crossover. Children stay inside the bounds;
// the random child swap makes each crossed coordinate symmetric about
// the parent midpoint, so the child expectation is the midpoint.
std::pair<DispatchDecision, DispatchDecision> sbx_crossover(const DispatchDecision& p1,
                                                            const DispatchDecision& p2,
                                                            const Nsga2Params& params,
                                                            const Bounds& bounds,
                                                            std::mt19937_64& rng);

// Bounded polynomial mutation; zero probability is the identity.
DispatchDecision polynomial_mutation(DispatchDecision x, double mutation_prob,
                                     const Nsga2Params& params, const Bounds& bounds,
                                     std::mt19937_64& rng);

// Classic generational loop: binary tournament on constraint-domination
// then (rank, crowding), SBX + polynomial mutation, and (mu+lambda)
// survival through prune. Returns the feasible rank-0 set of the final
// population, deduplicated.
FrontArchive run_nsga2(const Scenario& scenario, const Nsga2Params& params);

}  // namespace cchp
