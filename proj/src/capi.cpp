#include "cchpopt.h"

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "front_io.hpp"
#include "gde3.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "nsga2.hpp"
#include "scenario_io.hpp"

struct cchp_scenario {
    cchp::Scenario sc;
};

struct cchp_front {
    std::vector<cchp::Individual> members;
};

struct cchp_run {
    cchp::SolveResult result;
};

namespace {

thread_local std::string t_last_error;

int set_error(int code, std::string msg) {
    t_last_error = std::move(msg);
    return code;
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(CCHP_ERR_RUNTIME, e.what());
    } catch (...) {
        return set_error(CCHP_ERR_INTERNAL, "unknown error");
    }
}

int require_args(bool ok) {
    if (!ok) return set_error(CCHP_ERR_INVALID_ARGUMENT, "null argument");
    return CCHP_OK;
}

}  // namespace

extern "C" {

const char* cchp_version(void) { return "1.0.0"; }

const char* cchp_last_error(void) { return t_last_error.c_str(); }

int cchp_scenario_parse(const char* json_text, const char* origin, cchp_scenario** out) {
    if (int rc = require_args(json_text && out)) return rc;
    return guarded([&] {
        auto* handle = new cchp_scenario{cchp::parse_scenario(json_text, origin ? origin : "<memory>")};
        *out = handle;
        return CCHP_OK;
    });
}

int cchp_scenario_load(const char* path, cchp_scenario** out) {
    if (int rc = require_args(path && out)) return rc;
    return guarded([&] {
        *out = new cchp_scenario{cchp::load_scenario(path)};
        return CCHP_OK;
    });
}

void cchp_scenario_free(cchp_scenario* sc) { delete sc; }

const char* cchp_scenario_name(const cchp_scenario* sc) {
    return sc ? sc->sc.name.c_str() : "";
}

int cchp_scenario_num_periods(const cchp_scenario* sc, size_t* out) {
    if (int rc = require_args(sc && out)) return rc;
    *out = sc->sc.num_periods();
    return CCHP_OK;
}

int cchp_scenario_set_case(cchp_scenario* sc, int op_case) {
    if (int rc = require_args(sc != nullptr)) return rc;
    if (op_case < 1 || op_case > 3) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "operating case must be 1, 2 or 3");
    }
    sc->sc.op_case = static_cast<cchp::OperatingCase>(op_case);
    return CCHP_OK;
}

int cchp_scenario_set_interpretation(cchp_scenario* sc, int interpretation) {
    if (int rc = require_args(sc != nullptr)) return rc;
    if (interpretation != CCHP_INTERPRET_LITERAL && interpretation != CCHP_INTERPRET_FUEL_BASED) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "unknown interpretation");
    }
    sc->sc.interpretation = interpretation == CCHP_INTERPRET_LITERAL
                                ? cchp::Interpretation::Literal
                                : cchp::Interpretation::FuelBased;
    return CCHP_OK;
}

int cchp_scenario_reference(const cchp_scenario* sc, double objectives[3]) {
    if (int rc = require_args(sc && objectives)) return rc;
    return guarded([&] {
        const cchp::ObjectiveVector ref = cchp::reference_objectives(sc->sc);
        objectives[0] = ref.cost;
        objectives[1] = ref.pec;
        objectives[2] = ref.cde;
        return CCHP_OK;
    });
}

void cchp_gde3_params_init(cchp_gde3_params* p) {
    if (!p) return;
    const cchp::SolverParams d;
    p->pop_size = d.pop_size;
    p->max_iters = d.max_iters;
    p->f = d.f;
    p->cr = d.cr;
    p->seed = d.seed;
    p->bcs_mode = d.bcs_mode == cchp::BcsMode::Raw ? CCHP_BCS_RAW : CCHP_BCS_NORMALIZED;
}

void cchp_nsga2_params_init(cchp_nsga2_params* p) {
    if (!p) return;
    const cchp::Nsga2Params d;
    p->pop_size = d.pop_size;
    p->max_gens = d.max_gens;
    p->crossover_prob = d.crossover_prob;
    p->crossover_dist_index = d.crossover_dist_index;
    p->mutation_prob = d.mutation_prob ? *d.mutation_prob : -1.0;
    p->mutation_dist_index = d.mutation_dist_index;
    p->seed = d.seed;
}

int cchp_solve_gde3(const cchp_scenario* sc, const cchp_gde3_params* params, cchp_run** out) {
    if (int rc = require_args(sc && params && out)) return rc;
    return guarded([&] {
        if (params->bcs_mode != CCHP_BCS_RAW && params->bcs_mode != CCHP_BCS_NORMALIZED) {
            throw std::invalid_argument("unknown bcs mode");
        }
        cchp::SolverParams p;
        p.pop_size = params->pop_size;
        p.max_iters = params->max_iters;
        p.f = params->f;
        p.cr = params->cr;
        p.seed = params->seed;
        p.bcs_mode =
            params->bcs_mode == CCHP_BCS_RAW ? cchp::BcsMode::Raw : cchp::BcsMode::Normalized;
        *out = new cchp_run{cchp::run_gde3(sc->sc, p)};
        return CCHP_OK;
    });
}

int cchp_solve_nsga2(const cchp_scenario* sc, const cchp_nsga2_params* params, cchp_front** out) {
    if (int rc = require_args(sc && params && out)) return rc;
    return guarded([&] {
        cchp::Nsga2Params p;
        p.pop_size = params->pop_size;
        p.max_gens = params->max_gens;
        p.crossover_prob = params->crossover_prob;
        p.crossover_dist_index = params->crossover_dist_index;
        if (params->mutation_prob >= 0.0) p.mutation_prob = params->mutation_prob;
        p.mutation_dist_index = params->mutation_dist_index;
        p.seed = params->seed;
        *out = new cchp_front{cchp::run_nsga2(sc->sc, p).members()};
        return CCHP_OK;
    });
}

int cchp_oracle_front(const cchp_scenario* sc, size_t resolution, cchp_front** out) {
    if (int rc = require_args(sc && out)) return rc;
    return guarded([&] {
        *out = new cchp_front{cchp::brute_force_front(sc->sc, resolution).members()};
        return CCHP_OK;
    });
}

int cchp_run_feasible(const cchp_run* run) { return run && run->result.feasible ? 1 : 0; }

int cchp_run_front(const cchp_run* run, cchp_front** out) {
    if (int rc = require_args(run && out)) return rc;
    *out = new cchp_front{run->result.front.members()};
    return CCHP_OK;
}

int cchp_run_violation_report(const cchp_run* run, double out[3]) {
    if (int rc = require_args(run && out)) return rc;
    const cchp::ViolationMeasure& v = run->result.best_compromise.violation;
    out[0] = v.electric_deficit;
    out[1] = v.heat_deficit;
    out[2] = v.total;
    return CCHP_OK;
}

int cchp_run_telemetry_count(const cchp_run* run, size_t* out) {
    if (int rc = require_args(run && out)) return rc;
    *out = run->result.telemetry.size();
    return CCHP_OK;
}

int cchp_run_telemetry(const cchp_run* run, size_t index, size_t* iteration,
                       size_t* feasible_count, size_t* front_size, double* least_violation) {
    if (int rc = require_args(run != nullptr)) return rc;
    if (index >= run->result.telemetry.size()) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "telemetry index out of range");
    }
    const cchp::IterationStats& st = run->result.telemetry[index];
    if (iteration) *iteration = st.iteration;
    if (feasible_count) *feasible_count = st.feasible_count;
    if (front_size) *front_size = st.front_size;
    if (least_violation) *least_violation = st.least_violation;
    return CCHP_OK;
}

void cchp_run_free(cchp_run* run) { delete run; }

size_t cchp_front_size(const cchp_front* front) { return front ? front->members.size() : 0; }

int cchp_front_dimension(const cchp_front* front, size_t* out) {
    if (int rc = require_args(front && out)) return rc;
    if (front->members.empty()) return set_error(CCHP_ERR_INVALID_ARGUMENT, "empty front");
    *out = front->members.front().decision.size();
    return CCHP_OK;
}

int cchp_front_decision(const cchp_front* front, size_t index, const double** data, size_t* len) {
    if (int rc = require_args(front && data && len)) return rc;
    if (index >= front->members.size()) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "front index out of range");
    }
    *data = front->members[index].decision.data();
    *len = front->members[index].decision.size();
    return CCHP_OK;
}

int cchp_front_objectives(const cchp_front* front, size_t index, double out[3]) {
    if (int rc = require_args(front && out)) return rc;
    if (index >= front->members.size()) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "front index out of range");
    }
    const cchp::ObjectiveVector& v = front->members[index].objectives;
    out[0] = v.cost;
    out[1] = v.pec;
    out[2] = v.cde;
    return CCHP_OK;
}

int cchp_front_violation(const cchp_front* front, size_t index, double* out) {
    if (int rc = require_args(front && out)) return rc;
    if (index >= front->members.size()) {
        return set_error(CCHP_ERR_INVALID_ARGUMENT, "front index out of range");
    }
    *out = front->members[index].violation.total;
    return CCHP_OK;
}

int cchp_front_best_compromise(const cchp_front* front, int bcs_mode, size_t* index) {
    if (int rc = require_args(front && index)) return rc;
    return guarded([&] {
        if (bcs_mode != CCHP_BCS_RAW && bcs_mode != CCHP_BCS_NORMALIZED) {
            throw std::invalid_argument("unknown bcs mode");
        }
        const cchp::FrontArchive archive = cchp::FrontArchive::adopt(front->members);
        const cchp::Individual& best = cchp::best_compromise(
            archive, bcs_mode == CCHP_BCS_RAW ? cchp::BcsMode::Raw : cchp::BcsMode::Normalized);
        *index = static_cast<size_t>(&best - archive.members().data());
        return CCHP_OK;
    });
}

int cchp_front_save_csv(const cchp_front* front, const char* path) {
    if (int rc = require_args(front && path)) return rc;
    return guarded([&] {
        cchp::save_front_csv(path, front->members);
        return CCHP_OK;
    });
}

int cchp_front_load_csv(const char* path, cchp_front** out) {
    if (int rc = require_args(path && out)) return rc;
    return guarded([&] {
        *out = new cchp_front{cchp::load_front_csv(path)};
        return CCHP_OK;
    });
}

void cchp_front_free(cchp_front* front) { delete front; }

int cchp_evaluate_indicators(const cchp_front* const* fronts, size_t n, double* hv_out,
                             double* spread_out) {
    if (int rc = require_args(fronts && hv_out && spread_out && n > 0)) return rc;
    return guarded([&] {
        std::vector<std::vector<cchp::Point3>> sets;
        sets.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (!fronts[i]) throw std::invalid_argument("null front handle");
            sets.push_back(cchp::objectives_of(fronts[i]->members));
        }
        const auto reports = cchp::evaluate_indicators(sets);
        for (size_t i = 0; i < n; ++i) {
            hv_out[i] = reports[i].hv;
            spread_out[i] = reports[i].spread;
        }
        return CCHP_OK;
    });
}

int cchp_wilcoxon(const double* a, const double* b, size_t n, int alternative, double* p_out,
                  int* defined) {
    if (int rc = require_args(a && b && p_out && defined)) return rc;
    return guarded([&] {
        cchp::Alternative alt;
        switch (alternative) {
            case CCHP_TWO_SIDED: alt = cchp::Alternative::TwoSided; break;
            case CCHP_GREATER: alt = cchp::Alternative::Greater; break;
            case CCHP_LESS: alt = cchp::Alternative::Less; break;
            default: throw std::invalid_argument("unknown alternative");
        }
        const cchp::WilcoxonResult res = cchp::wilcoxon_signed_rank(
            std::vector<double>(a, a + n), std::vector<double>(b, b + n), alt);
        *p_out = res.p_value;
        *defined = res.defined ? 1 : 0;
        return CCHP_OK;
    });
}

}  // extern "C"
