// cchp: command-line front end for the CCHP dispatch optimization core.
//
// Verbs: solve, reference, compare, oracle. All file output lands in the
// directory picked by --out, then the CCHP_OUT_DIR environment variable,
// then the working directory. Scenario arguments are either paths or bare
// bundle names resolved inside CCHP_DATA_DIR.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error, 4 no feasible
// solution.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cchpopt.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 4;

struct ScenarioDeleter {
    void operator()(cchp_scenario* p) const { cchp_scenario_free(p); }
};
struct RunDeleter {
    void operator()(cchp_run* p) const { cchp_run_free(p); }
};
struct FrontDeleter {
    void operator()(cchp_front* p) const { cchp_front_free(p); }
};
using ScenarioPtr = std::unique_ptr<cchp_scenario, ScenarioDeleter>;
using RunPtr = std::unique_ptr<cchp_run, RunDeleter>;
using FrontPtr = std::unique_ptr<cchp_front, FrontDeleter>;

// Numbers are serialized with 12 significant digits so that files round
// trip byte-identically through the CSV/JSON layer.
double sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int exit_code_for(int rc) {
    return rc == CCHP_ERR_INVALID_ARGUMENT ? kExitUsage : kExitRuntime;
}

int fail(int rc, const std::string& what) {
    std::fprintf(stderr, "cchp: %s: %s\n", what.c_str(), cchp_last_error());
    return exit_code_for(rc);
}

std::string data_dir() {
    if (const char* env = std::getenv("CCHP_DATA_DIR")) return env;
    return CCHP_DEFAULT_DATA_DIR;
}

std::string output_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CCHP_OUT_DIR")) return env;
    return ".";
}

// A scenario argument is a path when one exists; otherwise it names a
// bundled file <data dir>/<name>.json.
std::string resolve_scenario(const std::string& arg) {
    if (fs::exists(arg)) return arg;
    fs::path bundled = fs::path(data_dir()) / arg;
    if (fs::exists(bundled)) return bundled.string();
    bundled += ".json";
    if (fs::exists(bundled)) return bundled.string();
    return {};
}

struct CommonOpts {
    std::string scenario;
    std::string out;
    int op_case = 0;             // 0 keeps the scenario's own setting
    std::string interpretation;  // empty keeps the scenario's own setting
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("scenario", opts.scenario, "scenario path or bundled name")->required();
    cmd->add_option("--out", opts.out, "output directory");
    cmd->add_option("--case", opts.op_case, "operating case")->check(CLI::Range(1, 3));
    cmd->add_option("--interpretation", opts.interpretation, "objective accounting basis")
        ->check(CLI::IsMember({"literal", "fuel_based"}));
}

int open_scenario(const CommonOpts& opts, ScenarioPtr& out) {
    const std::string path = resolve_scenario(opts.scenario);
    if (path.empty()) {
        std::fprintf(stderr, "cchp: scenario '%s' not found (data dir %s)\n",
                     opts.scenario.c_str(), data_dir().c_str());
        return kExitUsage;
    }
    cchp_scenario* raw = nullptr;
    if (int rc = cchp_scenario_load(path.c_str(), &raw)) return fail(rc, path);
    out.reset(raw);
    if (opts.op_case != 0) {
        if (int rc = cchp_scenario_set_case(out.get(), opts.op_case)) return fail(rc, "set case");
    }
    if (!opts.interpretation.empty()) {
        const int mode = opts.interpretation == "literal" ? CCHP_INTERPRET_LITERAL
                                                          : CCHP_INTERPRET_FUEL_BASED;
        if (int rc = cchp_scenario_set_interpretation(out.get(), mode)) {
            return fail(rc, "set interpretation");
        }
    }
    return kExitOk;
}

int write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.flush();
    if (!f) {
        std::fprintf(stderr, "cchp: cannot write %s\n", path.string().c_str());
        return kExitRuntime;
    }
    std::printf("wrote %s\n", path.string().c_str());
    return kExitOk;
}

int write_json(const fs::path& path, const json& doc) {
    return write_text(path, doc.dump(2) + "\n");
}

json front_member_record(const cchp_front* front, size_t index) {
    const double* dec = nullptr;
    size_t len = 0;
    double obj[3] = {0, 0, 0};
    cchp_front_decision(front, index, &dec, &len);
    cchp_front_objectives(front, index, obj);
    json rec;
    rec["index"] = index;
    rec["decision"] = json::array();
    for (size_t j = 0; j < len; ++j) rec["decision"].push_back(sig12(dec[j]));
    rec["objectives"] = {{"cost", sig12(obj[0])}, {"pec", sig12(obj[1])}, {"cde", sig12(obj[2])}};
    return rec;
}

// ---- solve ----

struct SolveOpts {
    CommonOpts common;
    std::string algo = "gde3";
    size_t pop = 100;
    size_t iters = 250;
    double f = 0.5;
    double cr = 0.5;
    double crossover_prob = 0.9;
    double eta_c = 20.0;
    double mutation_prob = -1.0;
    double eta_m = 20.0;
    uint64_t seed = 1;
};

int solve_front(const cchp_scenario* sc, const SolveOpts& o, uint64_t seed, FrontPtr& front,
                RunPtr& run) {
    if (o.algo == "gde3") {
        cchp_gde3_params p;
        cchp_gde3_params_init(&p);
        p.pop_size = o.pop;
        p.max_iters = o.iters;
        p.f = o.f;
        p.cr = o.cr;
        p.seed = seed;
        cchp_run* raw_run = nullptr;
        if (int rc = cchp_solve_gde3(sc, &p, &raw_run)) return rc;
        run.reset(raw_run);
        cchp_front* raw_front = nullptr;
        if (int rc = cchp_run_front(run.get(), &raw_front)) return rc;
        front.reset(raw_front);
    } else {
        cchp_nsga2_params p;
        cchp_nsga2_params_init(&p);
        p.pop_size = o.pop;
        p.max_gens = o.iters;
        p.crossover_prob = o.crossover_prob;
        p.crossover_dist_index = o.eta_c;
        p.mutation_prob = o.mutation_prob;
        p.mutation_dist_index = o.eta_m;
        p.seed = seed;
        cchp_front* raw_front = nullptr;
        if (int rc = cchp_solve_nsga2(sc, &p, &raw_front)) return rc;
        front.reset(raw_front);
    }
    return CCHP_OK;
}

int cmd_solve(const SolveOpts& o) {
    ScenarioPtr sc;
    if (int rc = open_scenario(o.common, sc)) return rc;
    const fs::path out(output_dir(o.common.out));
    std::error_code ec;
    fs::create_directories(out, ec);

    FrontPtr front;
    RunPtr run;
    if (int rc = solve_front(sc.get(), o, o.seed, front, run)) return fail(rc, "solve");

    if (cchp_front_size(front.get()) == 0) {
        json report;
        report["feasible"] = false;
        if (run) {
            double v[3] = {0, 0, 0};
            cchp_run_violation_report(run.get(), v);
            report["least_violation"] = {{"electric_deficit", sig12(v[0])},
                                         {"heat_deficit", sig12(v[1])},
                                         {"total", sig12(v[2])}};
            std::fprintf(stderr,
                         "cchp: no feasible solution; least violation %s"
                         " (electric deficit %s, heat deficit %s)\n",
                         fmt12(v[2]).c_str(), fmt12(v[0]).c_str(), fmt12(v[1]).c_str());
        } else {
            std::fprintf(stderr, "cchp: no feasible solution\n");
        }
        write_json(out / "infeasibility.json", report);
        return kExitInfeasible;
    }

    if (int rc = cchp_front_save_csv(front.get(), (out / "front.csv").string().c_str())) {
        return fail(rc, "front.csv");
    }
    std::printf("wrote %s (%zu solutions)\n", (out / "front.csv").string().c_str(),
                cchp_front_size(front.get()));

    json bcs;
    for (int mode : {CCHP_BCS_RAW, CCHP_BCS_NORMALIZED}) {
        size_t idx = 0;
        if (int rc = cchp_front_best_compromise(front.get(), mode, &idx)) {
            return fail(rc, "best compromise");
        }
        bcs[mode == CCHP_BCS_RAW ? "raw" : "normalized"] = front_member_record(front.get(), idx);
    }
    if (int rc = write_json(out / "bcs.json", bcs)) return rc;

    if (run) {
        size_t count = 0;
        cchp_run_telemetry_count(run.get(), &count);
        json tele = json::array();
        for (size_t i = 0; i < count; ++i) {
            size_t iter = 0, feas = 0, front_n = 0;
            double least = 0.0;
            cchp_run_telemetry(run.get(), i, &iter, &feas, &front_n, &least);
            tele.push_back({{"iteration", iter},
                            {"feasible_count", feas},
                            {"front_size", front_n},
                            {"least_violation", sig12(least)}});
        }
        if (int rc = write_json(out / "telemetry.json", tele)) return rc;
    }
    return kExitOk;
}

// ---- reference ----

struct ReferenceOpts {
    CommonOpts common;
    std::string front_path;
    std::string bcs_mode = "normalized";
};

int cmd_reference(const ReferenceOpts& o) {
    ScenarioPtr sc;
    if (int rc = open_scenario(o.common, sc)) return rc;
    double ref[3] = {0, 0, 0};
    if (int rc = cchp_scenario_reference(sc.get(), ref)) return fail(rc, "reference");
    for (double v : ref) {
        if (v == 0.0) {
            std::fprintf(stderr, "cchp: reference objective is zero; rates are undefined\n");
            return kExitRuntime;
        }
    }

    json doc;
    doc["reference"] = {{"cost", sig12(ref[0])}, {"pec", sig12(ref[1])}, {"cde", sig12(ref[2])}};
    std::printf("reference   cost %-16s pec %-16s cde %s\n", fmt12(ref[0]).c_str(),
                fmt12(ref[1]).c_str(), fmt12(ref[2]).c_str());

    if (!o.front_path.empty()) {
        cchp_front* raw = nullptr;
        if (int rc = cchp_front_load_csv(o.front_path.c_str(), &raw)) {
            return fail(rc, o.front_path);
        }
        FrontPtr front(raw);
        const int mode = o.bcs_mode == "raw" ? CCHP_BCS_RAW : CCHP_BCS_NORMALIZED;
        size_t idx = 0;
        if (int rc = cchp_front_best_compromise(front.get(), mode, &idx)) {
            return fail(rc, "best compromise");
        }
        double obj[3] = {0, 0, 0};
        cchp_front_objectives(front.get(), idx, obj);
        json bcs = front_member_record(front.get(), idx);
        bcs["mode"] = o.bcs_mode;
        const char* names[3] = {"cost", "pec", "cde"};
        json rates;
        std::printf("bcs         cost %-16s pec %-16s cde %s\n", fmt12(obj[0]).c_str(),
                    fmt12(obj[1]).c_str(), fmt12(obj[2]).c_str());
        std::printf("improvement ");
        for (int k = 0; k < 3; ++k) {
            const double rate = (ref[k] - obj[k]) / ref[k];
            rates[names[k]] = sig12(rate);
            std::printf("%s %.2f%%%s", names[k], 100.0 * rate, k == 2 ? "\n" : " ");
        }
        doc["bcs"] = bcs;
        doc["improvement"] = rates;
    }

    const fs::path out(output_dir(o.common.out));
    std::error_code ec;
    fs::create_directories(out, ec);
    return write_json(out / "reference.json", doc);
}

// ---- compare ----

struct CompareOpts {
    CommonOpts common;
    std::vector<std::string> algos;
    std::vector<std::string> externals;  // name=path
    size_t num_seeds = 20;
    uint64_t seed = 1;
    size_t jobs = 0;
    size_t pop = 100;
    size_t iters = 250;
    double f = 0.5;
    double cr = 0.5;
};

struct CompareEntry {
    std::string name;
    std::string algo;                // "gde3", "nsga2", or "" for external
    std::vector<std::string> files;  // external front paths
    std::vector<FrontPtr> fronts;
};

int run_entry_seeds(const CompareOpts& o, const std::string& scenario_path, CompareEntry& entry,
                    const fs::path& fronts_dir) {
    entry.fronts.resize(o.num_seeds);
    std::vector<std::string> errors(o.num_seeds);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= o.num_seeds) return;
            ScenarioPtr sc;
            CommonOpts per = o.common;
            per.scenario = scenario_path;
            if (open_scenario(per, sc) != kExitOk) {
                errors[i] = "scenario load failed";
                continue;
            }
            SolveOpts so;
            so.algo = entry.algo;
            so.pop = o.pop;
            so.iters = o.iters;
            so.f = o.f;
            so.cr = o.cr;
            const uint64_t seed = o.seed + i;
            FrontPtr front;
            RunPtr run;
            if (solve_front(sc.get(), so, seed, front, run) != CCHP_OK) {
                errors[i] = cchp_last_error();
                continue;
            }
            if (cchp_front_size(front.get()) == 0) {
                errors[i] = "no feasible solution";
                continue;
            }
            const fs::path path = fronts_dir / (entry.name + "_seed" + std::to_string(seed) +
                                                ".csv");
            if (cchp_front_save_csv(front.get(), path.string().c_str())) {
                errors[i] = cchp_last_error();
                continue;
            }
            entry.fronts[i] = std::move(front);
        }
    };
    const size_t hw = std::thread::hardware_concurrency();
    const size_t jobs = std::max<size_t>(1, std::min(o.jobs ? o.jobs : (hw ? hw : 1),
                                                     o.num_seeds));
    std::vector<std::future<void>> pool;
    for (size_t j = 0; j + 1 < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& fut : pool) fut.get();
    for (size_t i = 0; i < o.num_seeds; ++i) {
        if (!errors[i].empty()) {
            std::fprintf(stderr, "cchp: %s seed %llu: %s\n", entry.name.c_str(),
                         static_cast<unsigned long long>(o.seed + i), errors[i].c_str());
            return kExitRuntime;
        }
    }
    return kExitOk;
}

json wilcoxon_record(const std::vector<double>& a, const std::vector<double>& b,
                     int preferred_alternative) {
    json rec;
    double p = 0.0;
    int defined = 0;
    if (cchp_wilcoxon(a.data(), b.data(), a.size(), CCHP_TWO_SIDED, &p, &defined)) {
        rec["error"] = cchp_last_error();
        return rec;
    }
    rec["defined"] = defined != 0;
    rec["p_two_sided"] = defined ? json(sig12(p)) : json(nullptr);
    cchp_wilcoxon(a.data(), b.data(), a.size(), preferred_alternative, &p, &defined);
    const char* key = preferred_alternative == CCHP_GREATER ? "p_a_greater" : "p_a_less";
    rec[key] = defined ? json(sig12(p)) : json(nullptr);
    return rec;
}

int cmd_compare(const CompareOpts& o) {
    const std::string scenario_path = resolve_scenario(o.common.scenario);
    if (scenario_path.empty()) {
        std::fprintf(stderr, "cchp: scenario '%s' not found (data dir %s)\n",
                     o.common.scenario.c_str(), data_dir().c_str());
        return kExitUsage;
    }

    std::vector<CompareEntry> entries;
    std::vector<std::string> algos = o.algos;
    if (algos.empty() && o.externals.empty()) algos = {"gde3", "nsga2"};
    for (const std::string& a : algos) {
        entries.push_back({a, a, {}, {}});
    }
    for (const std::string& item : o.externals) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
            std::fprintf(stderr, "cchp: --front expects NAME=PATH, got '%s'\n", item.c_str());
            return kExitUsage;
        }
        const std::string name = item.substr(0, eq);
        const std::string path = item.substr(eq + 1);
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CompareEntry& e) { return e.name == name; });
        if (it == entries.end()) {
            entries.push_back({name, "", {path}, {}});
        } else if (it->algo.empty()) {
            it->files.push_back(path);
        } else {
            std::fprintf(stderr, "cchp: name '%s' already taken by a solver\n", name.c_str());
            return kExitUsage;
        }
    }
    if (entries.size() < 2) {
        std::fprintf(stderr, "cchp: compare needs at least two algorithms or fronts\n");
        return kExitUsage;
    }

    const fs::path out(output_dir(o.common.out));
    const fs::path fronts_dir = out / "fronts";
    std::error_code ec;
    fs::create_directories(fronts_dir, ec);

    size_t per_entry = 0;
    for (CompareEntry& e : entries) {
        if (e.algo.empty()) {
            for (const std::string& path : e.files) {
                cchp_front* raw = nullptr;
                if (int rc = cchp_front_load_csv(path.c_str(), &raw)) return fail(rc, path);
                e.fronts.emplace_back(raw);
            }
        } else {
            if (int rc = run_entry_seeds(o, scenario_path, e, fronts_dir)) return rc;
        }
        if (per_entry == 0) per_entry = e.fronts.size();
        if (e.fronts.size() != per_entry) {
            std::fprintf(stderr, "cchp: '%s' has %zu fronts, expected %zu per algorithm\n",
                         e.name.c_str(), e.fronts.size(), per_entry);
            return kExitUsage;
        }
    }

    // one indicator evaluation so every front shares the same normalization
    std::vector<const cchp_front*> all;
    for (const CompareEntry& e : entries) {
        for (const FrontPtr& f : e.fronts) all.push_back(f.get());
    }
    std::vector<double> hv(all.size()), spread(all.size());
    if (int rc = cchp_evaluate_indicators(all.data(), all.size(), hv.data(), spread.data())) {
        return fail(rc, "indicators");
    }

    std::string csv = "algorithm,seed,hypervolume,spread\n";
    size_t cursor = 0;
    std::vector<std::vector<double>> entry_hv, entry_spread;
    for (const CompareEntry& e : entries) {
        std::vector<double> hs, ss;
        for (size_t i = 0; i < per_entry; ++i, ++cursor) {
            const std::string seed_label = e.algo.empty()
                                               ? std::to_string(i + 1)
                                               : std::to_string(o.seed + i);
            csv += e.name + "," + seed_label + "," + fmt12(hv[cursor]) + "," +
                   fmt12(spread[cursor]) + "\n";
            hs.push_back(hv[cursor]);
            ss.push_back(spread[cursor]);
        }
        auto stat = [&](const char* label, double h, double s) {
            csv += e.name + std::string(",") + label + "," + fmt12(h) + "," + fmt12(s) + "\n";
        };
        stat("max", *std::max_element(hs.begin(), hs.end()),
             *std::max_element(ss.begin(), ss.end()));
        stat("min", *std::min_element(hs.begin(), hs.end()),
             *std::min_element(ss.begin(), ss.end()));
        const double mh = std::accumulate(hs.begin(), hs.end(), 0.0) / hs.size();
        const double ms = std::accumulate(ss.begin(), ss.end(), 0.0) / ss.size();
        stat("ave", mh, ms);
        entry_hv.push_back(std::move(hs));
        entry_spread.push_back(std::move(ss));
    }
    if (int rc = write_text(out / "indicators.csv", csv)) return rc;

    json wilcox;
    wilcox["pairs"] = json::array();
    for (size_t a = 0; a < entries.size(); ++a) {
        for (size_t b = a + 1; b < entries.size(); ++b) {
            json pair;
            pair["a"] = entries[a].name;
            pair["b"] = entries[b].name;
            pair["hypervolume"] = wilcoxon_record(entry_hv[a], entry_hv[b], CCHP_GREATER);
            pair["spread"] = wilcoxon_record(entry_spread[a], entry_spread[b], CCHP_LESS);
            wilcox["pairs"].push_back(std::move(pair));
        }
    }
    return write_json(out / "wilcoxon.json", wilcox);
}

// ---- oracle ----

struct OracleOpts {
    CommonOpts common;
    size_t resolution = 64;
};

int cmd_oracle(const OracleOpts& o) {
    ScenarioPtr sc;
    if (int rc = open_scenario(o.common, sc)) return rc;
    cchp_front* raw = nullptr;
    if (int rc = cchp_oracle_front(sc.get(), o.resolution, &raw)) return fail(rc, "oracle");
    FrontPtr front(raw);
    const fs::path out(output_dir(o.common.out));
    std::error_code ec;
    fs::create_directories(out, ec);
    const fs::path path = out / "oracle_front.csv";
    if (int rc = cchp_front_save_csv(front.get(), path.string().c_str())) {
        return fail(rc, path.string());
    }
    std::printf("wrote %s (%zu solutions)\n", path.string().c_str(),
                cchp_front_size(front.get()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CCHP dispatch optimization"};
    app.set_version_flag("--version", cchp_version());
    app.require_subcommand(1);

    SolveOpts solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "run one optimization");
    add_common(solve, solve_opts.common);
    solve->add_option("--algo", solve_opts.algo, "solver")
        ->check(CLI::IsMember({"gde3", "nsga2"}));
    solve->add_option("--pop", solve_opts.pop, "population size");
    solve->add_option("--iters", solve_opts.iters, "iterations / generations");
    solve->add_option("--f", solve_opts.f, "differential weight (gde3)");
    solve->add_option("--cr", solve_opts.cr, "crossover rate (gde3)");
    solve->add_option("--crossover-prob", solve_opts.crossover_prob, "SBX rate (nsga2)");
    solve->add_option("--eta-c", solve_opts.eta_c, "SBX distribution index (nsga2)");
    solve->add_option("--mutation-prob", solve_opts.mutation_prob,
                      "mutation rate (nsga2); negative selects 1/dimension");
    solve->add_option("--eta-m", solve_opts.eta_m, "mutation distribution index (nsga2)");
    solve->add_option("--seed", solve_opts.seed, "RNG seed");

    ReferenceOpts ref_opts;
    CLI::App* reference = app.add_subcommand("reference", "separate-production baseline");
    add_common(reference, ref_opts.common);
    reference->add_option("--front", ref_opts.front_path, "front CSV to rate against");
    reference->add_option("--bcs-mode", ref_opts.bcs_mode, "best-compromise distance basis")
        ->check(CLI::IsMember({"raw", "normalized"}));

    CompareOpts cmp_opts;
    CLI::App* compare = app.add_subcommand("compare", "multi-seed indicator study");
    add_common(compare, cmp_opts.common);
    compare->add_option("--algo", cmp_opts.algos, "solver to include (repeatable)")
        ->check(CLI::IsMember({"gde3", "nsga2"}));
    compare->add_option("--front", cmp_opts.externals,
                        "external front as NAME=PATH (repeatable)");
    compare->add_option("--num-seeds", cmp_opts.num_seeds, "seeds per solver")
        ->check(CLI::PositiveNumber);
    compare->add_option("--seed", cmp_opts.seed, "first seed");
    compare->add_option("--jobs", cmp_opts.jobs, "parallel solver runs (0 = hardware)");
    compare->add_option("--pop", cmp_opts.pop, "population size");
    compare->add_option("--iters", cmp_opts.iters, "iterations / generations");
    compare->add_option("--f", cmp_opts.f, "differential weight (gde3)");
    compare->add_option("--cr", cmp_opts.cr, "crossover rate (gde3)");

    OracleOpts oracle_opts;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid front (T = 1)");
    add_common(oracle, oracle_opts.common);
    oracle->add_option("--resolution", oracle_opts.resolution, "grid points per axis")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opts);
        if (reference->parsed()) return cmd_reference(ref_opts);
        if (compare->parsed()) return cmd_compare(cmp_opts);
        return cmd_oracle(oracle_opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "cchp: %s\n", e.what());
        return kExitRuntime;
    }
}
