#include "moea.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cchp {

Individual evaluate_individual(DispatchDecision decision, const Scenario& scenario) {
    Individual ind;
    ind.objectives = eval_objectives(decision, scenario);
    ind.violation = violation(decision, scenario);
    ind.decision = std::move(decision);
    return ind;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    const auto x = a.as_array();
    const auto y = b.as_array();
    bool strict = false;
    for (std::size_t i = 0; i < 3; ++i) {
        if (x[i] > y[i]) return false;
        if (x[i] < y[i]) strict = true;
    }
    return strict;
}

bool constraint_dominates(const Individual& a, const Individual& b) {
    const bool af = a.feasible();
    const bool bf = b.feasible();
    if (af != bf) return af;
    if (!af) return a.violation.total < b.violation.total;
    return dominates(a, b);
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(const std::vector<Individual>& pop) {
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dom_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (constraint_dominates(pop[i], pop[j])) {
                dominated[i].push_back(j);
            } else if (constraint_dominates(pop[j], pop[i])) {
                ++dom_count[i];
            }
        }
        if (dom_count[i] == 0) current.push_back(i);
    }

    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : fronts.back()) {
            for (std::size_t j : dominated[i]) {
                if (--dom_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Individual>& pop,
                                      const std::vector<std::size_t>& front) {
    const std::size_t n = front.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }

    std::vector<std::size_t> order(n);
    for (std::size_t m = 0; m < 3; ++m) {
        for (std::size_t k = 0; k < n; ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop[front[a]].objectives.as_array()[m] <
                   pop[front[b]].objectives.as_array()[m];
        });
        const double lo = pop[front[order.front()]].objectives.as_array()[m];
        const double hi = pop[front[order.back()]].objectives.as_array()[m];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        if (hi <= lo) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double below = pop[front[order[k - 1]]].objectives.as_array()[m];
            const double above = pop[front[order[k + 1]]].objectives.as_array()[m];
            dist[order[k]] += (above - below) / (hi - lo);
        }
    }
    return dist;
}

std::vector<Individual> prune(const std::vector<Individual>& pop, std::size_t n) {
    if (n > pop.size()) throw std::invalid_argument("prune: n exceeds population size");

    auto fronts = fast_nondominated_sort(pop);
    std::vector<std::size_t> keep;
    keep.reserve(n);
    for (const auto& front : fronts) {
        if (keep.size() + front.size() <= n) {
            keep.insert(keep.end(), front.begin(), front.end());
            if (keep.size() == n) break;
            continue;
        }
        const std::size_t need = n - keep.size();
        std::vector<double> cd = crowding_distance(pop, front);
        std::vector<std::size_t> order(front.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
        std::vector<std::size_t> chosen(order.begin(), order.begin() + need);
        std::sort(chosen.begin(), chosen.end());
        for (std::size_t k : chosen) keep.push_back(front[k]);
        break;
    }

    std::sort(keep.begin(), keep.end());
    std::vector<Individual> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(pop[i]);
    return out;
}

FrontArchive FrontArchive::adopt(std::vector<Individual> members) {
    FrontArchive arc;
    arc.members_ = std::move(members);
    return arc;
}

bool FrontArchive::insert(Individual candidate) {
    if (!candidate.feasible()) return false;
    for (const Individual& m : members_) {
        const auto a = m.objectives.as_array();
        const auto b = candidate.objectives.as_array();
        if (a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]) return false;
    }
    std::erase_if(members_, [&](const Individual& m) { return dominates(candidate, m); });
    members_.push_back(std::move(candidate));
    return true;
}

}  // namespace cchp
