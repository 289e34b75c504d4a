#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "moea.hpp"

namespace cchp {

// Best-compromise distance basis. Raw measures the plain Euclidean norm of
// the objective triple (the emission scale then dwarfs the others);
// Normalized min-max scales the front per objective first.
enum class BcsMode { Raw, Normalized };

struct SolverParams {
    std::size_t pop_size = 100;
    std::size_t max_iters = 250;
    double f = 0.5;
    double cr = 0.5;
    std::uint64_t seed = 1;
    BcsMode bcs_mode = BcsMode::Raw;

    // Throws std::invalid_argument: pop_size >= 4, cr in [0,1], f > 0.
    void validate() const;
};

struct IterationStats {
    std::size_t iteration = 0;
    std::size_t feasible_count = 0;   // feasible members of the population
    std::size_t front_size = 0;       // feasible rank-0 members, deduplicated
    double least_violation = 0.0;     // smallest violation in the population
};

struct SolveResult {
    FrontArchive front;               // feasible rank-0 set of the final population
    std::vector<Individual> population;
    Individual best_compromise;       // least-violating individual when infeasible
    bool feasible = false;
    std::vector<IterationStats> telemetry;
};

// DE/rand/1/bin trial: u_j = x_r1,j + F (x_r2,j - x_r3,j) where rand < CR
// or j = j_rand, else the parent component; out-of-bounds components clamp
// to the violated bound. r1, r2, r3 are distinct and differ from parent.
DispatchDecision de_trial(const std::vector<Individual>& pop, std::size_t parent,
                          const SolverParams& params, const Bounds& bounds,
                          std::mt19937_64& rng);

// One GDE3 generation: per parent, the trial replaces it when the trial
// constraint-dominates, is discarded when the parent does, and otherwise
// both survive; the pool is then pruned back to pop_size.
std::vector<Individual> gde3_step(const std::vector<Individual>& pop, const Scenario& scenario,
                                  const SolverParams& params, const Bounds& bounds,
                                  std::mt19937_64& rng);

// Nearest front member to the ideal point (0,0,0); ties break
// lexicographically by objective vector. Throws on an empty front.
const Individual& best_compromise(const FrontArchive& front, BcsMode mode);

// Full solver run: uniform-random initial population within bounds, then
// exactly max_iters generations. When no feasible solution exists the
// result carries the least-violating individual as a diagnostic.
SolveResult run_gde3(const Scenario& scenario, const SolverParams& params);

const char* to_string(BcsMode m);

}  // namespace cchp
