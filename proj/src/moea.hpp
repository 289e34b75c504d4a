#pragma once

#include <cstddef>
#include <vector>

#include "model.hpp"

namespace cchp {

// One candidate solution with its cached evaluation.
struct Individual {
    DispatchDecision decision;
    ObjectiveVector objectives;
    ViolationMeasure violation;

    bool feasible() const { return violation.feasible(); }
};

Individual evaluate_individual(DispatchDecision decision, const Scenario& scenario);

// Pareto dominance on the minimization triple.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);
inline bool dominates(const Individual& a, const Individual& b) {
    return dominates(a.objectives, b.objectives);
}

// Feasible beats infeasible; infeasibles compare by total violation;
// feasibles compare by Pareto dominance.
bool constraint_dominates(const Individual& a, const Individual& b);

// Deb's fast non-dominated sort under constraint-domination. Returns
// index fronts in rank order; indices within a front keep input order.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(const std::vector<Individual>& pop);

// Crowding distance of one front (given as indices into pop). Boundary
// members per objective get +inf.
std::vector<double> crowding_distance(const std::vector<Individual>& pop,
                                      const std::vector<std::size_t>& front);

// Keep n members: whole fronts in rank order, the partial last front by
// descending crowding distance, ties by insertion index. Output preserves
// input order. Throws when n exceeds the population size.
std::vector<Individual> prune(const std::vector<Individual>& pop, std::size_t n);

// Unbounded archive of feasible, mutually non-dominated individuals.
class FrontArchive {
public:
    // Rejects infeasible candidates and candidates weakly dominated by a
    // member; evicts members the candidate dominates. Returns whether the
    // candidate entered.
    bool insert(Individual candidate);

    // Wrap a set that is already feasible and mutually non-dominated,
    // skipping the per-candidate scans.
    static FrontArchive adopt(std::vector<Individual> members);

    const std::vector<Individual>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

private:
    std::vector<Individual> members_;
};

}  // namespace cchp
