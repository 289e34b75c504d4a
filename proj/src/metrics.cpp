#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rng.hpp"

namespace cchp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Area gained by adding the box [x, rx] x [y, ry] to the union tracked by
// the staircase (map x -> y over the 2D non-dominated inserts).
double staircase_gain(std::map<double, double>& stair, double x, double y, double rx, double ry) {
    auto it = stair.upper_bound(x);
    const double cover = (it == stair.begin()) ? ry : std::prev(it)->second;
    if (cover <= y) return 0.0;

    double gain = 0.0;
    double cur = x;
    double level = cover;
    for (auto walk = it; level > y;) {
        const double seg_end = (walk == stair.end()) ? rx : walk->first;
        gain += (seg_end - cur) * (level - y);
        if (walk == stair.end()) break;
        cur = walk->first;
        level = walk->second;
        ++walk;
    }

    auto e = stair.lower_bound(x);
    while (e != stair.end() && e->second >= y) e = stair.erase(e);
    stair[x] = y;
    return gain;
}

double dist3(const Point3& a, const Point3& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (hi <= lo) return {lo};
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * double(i) / double(n - 1);
    }
    return v;
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

std::vector<Point3> objectives_of(const std::vector<Individual>& members) {
    std::vector<Point3> pts;
    pts.reserve(members.size());
    for (const Individual& m : members) pts.push_back(m.objectives.as_array());
    return pts;
}

std::vector<std::size_t> nondominated_indices(const std::vector<Point3>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pts[a] < pts[b];
    });

    std::map<double, double> stair;  // f1 -> f2 over kept points with smaller f0
    std::vector<std::size_t> kept;

    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pts[order[j]][0] == pts[order[i]][0]) ++j;

        std::vector<std::size_t> group;
        for (std::size_t k = i; k < j; ++k) {
            const Point3& p = pts[order[k]];
            auto it = stair.upper_bound(p[1]);
            const double cover = (it == stair.begin()) ? kInf : std::prev(it)->second;
            if (cover <= p[2]) continue;
            group.push_back(order[k]);
        }

        // 2D filter among the equal-f0 group; order is already (f1, f2)
        // ascending from the global sort.
        double best = kInf;
        std::vector<std::size_t> survivors;
        for (std::size_t idx : group) {
            if (pts[idx][2] < best) {
                survivors.push_back(idx);
                best = pts[idx][2];
            }
        }

        for (std::size_t idx : survivors) {
            const Point3& p = pts[idx];
            auto e = stair.lower_bound(p[1]);
            while (e != stair.end() && e->second >= p[2]) e = stair.erase(e);
            stair[p[1]] = p[2];
            kept.push_back(idx);
        }
        i = j;
    }

    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Point3> nondominated_filter(const std::vector<Point3>& pts) {
    std::vector<Point3> out;
    for (std::size_t i : nondominated_indices(pts)) out.push_back(pts[i]);
    return out;
}

std::vector<Point3> normalize_front(const std::vector<Point3>& pts, const Point3& ideal,
                                    const Point3& nadir) {
    std::vector<Point3> out;
    out.reserve(pts.size());
    for (const Point3& p : pts) {
        Point3 q{};
        for (std::size_t m = 0; m < 3; ++m) {
            const double span = nadir[m] - ideal[m];
            q[m] = span > 0.0 ? std::clamp((p[m] - ideal[m]) / span, 0.0, 1.0) : 0.0;
        }
        out.push_back(q);
    }
    return out;
}

double hypervolume(const std::vector<Point3>& pts, const Point3& ref, std::size_t* excluded) {
    std::vector<Point3> box;
    std::size_t excl = 0;
    for (const Point3& p : pts) {
        if (p[0] < ref[0] && p[1] < ref[1] && p[2] < ref[2]) {
            box.push_back(p);
        } else {
            ++excl;
        }
    }
    if (excluded) *excluded = excl;
    if (box.empty()) return 0.0;

    std::sort(box.begin(), box.end(), [](const Point3& a, const Point3& b) {
        return std::tie(a[2], a[0], a[1]) < std::tie(b[2], b[0], b[1]);
    });

    std::map<double, double> stair;
    double area = 0.0;
    double volume = 0.0;
    double z_prev = box.front()[2];
    std::size_t i = 0;
    while (i < box.size()) {
        const double z = box[i][2];
        volume += area * (z - z_prev);
        while (i < box.size() && box[i][2] == z) {
            area += staircase_gain(stair, box[i][0], box[i][1], ref[0], ref[1]);
            ++i;
        }
        z_prev = z;
    }
    volume += area * (ref[2] - z_prev);
    return volume;
}

double mc_hypervolume(const std::vector<Point3>& pts, const Point3& ref, std::size_t samples,
                      std::uint64_t seed) {
    std::vector<Point3> box;
    for (const Point3& p : pts) {
        if (p[0] < ref[0] && p[1] < ref[1] && p[2] < ref[2]) box.push_back(p);
    }
    if (box.empty() || samples == 0) return 0.0;

    Point3 lo = box.front();
    for (const Point3& p : box) {
        for (std::size_t m = 0; m < 3; ++m) lo[m] = std::min(lo[m], p[m]);
    }
    const double vol_box =
        (ref[0] - lo[0]) * (ref[1] - lo[1]) * (ref[2] - lo[2]);

    std::mt19937_64 rng(seed);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Point3 q;
        for (std::size_t m = 0; m < 3; ++m) {
            q[m] = lo[m] + (ref[m] - lo[m]) * uniform01(rng);
        }
        for (const Point3& p : box) {
            if (p[0] <= q[0] && p[1] <= q[1] && p[2] <= q[2]) {
                ++hits;
                break;
            }
        }
    }
    return vol_box * double(hits) / double(samples);
}

std::array<Point3, 3> extreme_points(const std::vector<Point3>& pts) {
    if (pts.empty()) throw std::invalid_argument("extreme_points: empty set");
    std::array<Point3, 3> ext{};
    for (std::size_t m = 0; m < 3; ++m) {
        const Point3* best = &pts.front();
        for (const Point3& p : pts) {
            if (p[m] > (*best)[m] || (p[m] == (*best)[m] && p < *best)) best = &p;
        }
        ext[m] = *best;
    }
    return ext;
}

double generalized_spread(const std::vector<Point3>& front,
                          const std::array<Point3, 3>& extremes) {
    const std::size_t n = front.size();
    if (n < 2) throw std::invalid_argument("generalized_spread: needs at least 2 points");

    std::vector<double> nn(n, kInf);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) nn[i] = std::min(nn[i], dist3(front[i], front[j]));
        }
    }
    const double mean = std::accumulate(nn.begin(), nn.end(), 0.0) / double(n);

    double ext_gap = 0.0;
    for (const Point3& e : extremes) {
        double d = kInf;
        for (const Point3& p : front) d = std::min(d, dist3(e, p));
        ext_gap += d;
    }

    double dev = 0.0;
    for (double d : nn) dev += std::abs(d - mean);

    const double num = ext_gap + dev;
    const double den = ext_gap + double(n) * mean;
    return den > 0.0 ? num / den : 0.0;
}

std::vector<IndicatorReport> evaluate_indicators(const std::vector<std::vector<Point3>>& fronts) {
    std::vector<std::vector<Point3>> filtered;
    filtered.reserve(fronts.size());
    std::vector<Point3> all;
    for (const auto& f : fronts) {
        filtered.push_back(nondominated_filter(f));
        all.insert(all.end(), filtered.back().begin(), filtered.back().end());
    }

    std::vector<IndicatorReport> reports(fronts.size());
    if (all.empty()) return reports;

    Point3 ideal = all.front(), nadir = all.front();
    for (const Point3& p : all) {
        for (std::size_t m = 0; m < 3; ++m) {
            ideal[m] = std::min(ideal[m], p[m]);
            nadir[m] = std::max(nadir[m], p[m]);
        }
    }

    const std::vector<Point3> union_front =
        nondominated_filter(normalize_front(all, ideal, nadir));
    const auto extremes = extreme_points(union_front);
    const Point3 ref{kIndicatorRef, kIndicatorRef, kIndicatorRef};
    const double scale = kIndicatorRef * kIndicatorRef * kIndicatorRef;

    for (std::size_t k = 0; k < fronts.size(); ++k) {
        const std::vector<Point3> norm = normalize_front(filtered[k], ideal, nadir);
        reports[k].n_solutions = norm.size();
        reports[k].hv = hypervolume(norm, ref) / scale;
        reports[k].spread = norm.size() >= 2 ? generalized_spread(norm, extremes) : 0.0;
    }
    return reports;
}

FrontArchive population_front(const std::vector<Individual>& pop) {
    std::vector<Individual> feasible;
    if (!pop.empty()) {
        const auto fronts = fast_nondominated_sort(pop);
        for (const std::size_t i : fronts.front()) {
            if (pop[i].feasible()) feasible.push_back(pop[i]);
        }
    }
    std::vector<Individual> unique;
    for (const std::size_t i : nondominated_indices(objectives_of(feasible))) {
        unique.push_back(std::move(feasible[i]));
    }
    return FrontArchive::adopt(std::move(unique));
}

FrontArchive brute_force_front(const Scenario& scenario, std::size_t resolution) {
    if (scenario.num_periods() != 1) {
        throw std::invalid_argument("brute_force_front: single-period scenarios only");
    }
    if (resolution < 2) throw std::invalid_argument("brute_force_front: resolution must be >= 2");

    const Bounds b = decision_bounds(scenario);
    const std::vector<double> ax1 = linspace(b.lo[0], b.hi[0], resolution);
    const std::vector<double> ax2 = linspace(b.lo[1], b.hi[1], resolution);
    const std::vector<double> ax3 = linspace(b.lo[2], b.hi[2], resolution);

    // The feasible set can be most of the grid; condensing to the
    // non-dominated subset in blocks keeps memory bounded.
    constexpr std::size_t kCondenseAt = 1 << 19;
    std::vector<Individual> pool;
    auto condense = [&pool] {
        std::vector<Individual> kept;
        for (std::size_t i : nondominated_indices(objectives_of(pool))) {
            kept.push_back(std::move(pool[i]));
        }
        pool = std::move(kept);
    };

    for (double x1 : ax1) {
        for (double x2 : ax2) {
            for (double x3 : ax3) {
                Individual ind = evaluate_individual({x1, x2, x3}, scenario);
                if (ind.feasible()) pool.push_back(std::move(ind));
                if (pool.size() >= kCondenseAt) condense();
            }
        }
    }
    condense();
    return FrontArchive::adopt(std::move(pool));
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    Alternative alternative) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("wilcoxon_signed_rank: sample sizes differ");
    }
    if (a.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty samples");

    std::vector<double> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) diff.push_back(a[i] - b[i]);
    }

    WilcoxonResult res;
    res.n = diff.size();
    if (diff.empty()) {
        res.p_value = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    res.defined = true;

    const std::size_t n = diff.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(diff[x]) < std::abs(diff[y]);
    });

    // Average ranks over ties; rank2 keeps everything integral (2x rank).
    std::vector<long long> rank2(n, 0);
    double tie_correction = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && std::abs(diff[order[j]]) == std::abs(diff[order[i]])) ++j;
        const long long avg2 = (long long)(i + 1) + (long long)j;  // 2 * mean of ranks i+1..j
        for (std::size_t k = i; k < j; ++k) rank2[order[k]] = avg2;
        const double t = double(j - i);
        tie_correction += (t * t * t - t) / 48.0;
        i = j;
    }

    long long wp2 = 0, wm2 = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (diff[k] > 0) {
            wp2 += rank2[k];
        } else {
            wm2 += rank2[k];
        }
    }
    res.w_plus = double(wp2) / 2.0;
    res.w_minus = double(wm2) / 2.0;

    auto exact_cdf = [&](long long w2) {
        // P(W <= w2/2) over all 2^n sign assignments with these ranks.
        const long long total = std::accumulate(rank2.begin(), rank2.end(), 0LL);
        const long long cap = std::min(w2, total);
        if (cap < 0) return 0.0;
        std::vector<double> count(std::size_t(cap) + 1, 0.0);
        count[0] = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            for (long long s = cap; s >= rank2[k]; --s) {
                count[std::size_t(s)] += count[std::size_t(s - rank2[k])];
            }
        }
        const double below = std::accumulate(count.begin(), count.end(), 0.0);
        return below / std::pow(2.0, double(n));
    };

    double p_greater, p_less;
    if (n <= 25) {
        res.exact = true;
        p_greater = exact_cdf(wm2);
        p_less = exact_cdf(wp2);
    } else {
        const double dn = double(n);
        const double mean = dn * (dn + 1.0) / 4.0;
        const double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_correction;
        const double sd = std::sqrt(var);
        p_greater = norm_cdf((res.w_minus - mean + 0.5) / sd);
        p_less = norm_cdf((res.w_plus - mean + 0.5) / sd);
    }

    switch (alternative) {
        case Alternative::Greater: res.p_value = p_greater; break;
        case Alternative::Less: res.p_value = p_less; break;
        case Alternative::TwoSided:
            res.p_value = std::min(1.0, 2.0 * std::min(p_greater, p_less));
            break;
    }
    return res;
}

}  // namespace cchp
