/* C interface to the CCHP dispatch optimization core.
 *
 * All functions returning int yield CCHP_OK on success or an error code;
 * cchp_last_error() describes the most recent failure on the calling
 * thread. Objects are created behind opaque handles and released with
 * the matching _free function. Handles are not thread-safe individually;
 * distinct handles may be used from distinct threads.
 */
#ifndef CCHPOPT_H
#define CCHPOPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CCHP_OK 0
#define CCHP_ERR_INVALID_ARGUMENT 1
#define CCHP_ERR_RUNTIME 2
#define CCHP_ERR_INTERNAL 3

#define CCHP_CASE_FULL_SYSTEM 1
#define CCHP_CASE_PGU_OFF 2
#define CCHP_CASE_BOILER_OFF 3

#define CCHP_INTERPRET_LITERAL 0
#define CCHP_INTERPRET_FUEL_BASED 1

#define CCHP_BCS_RAW 0
#define CCHP_BCS_NORMALIZED 1

#define CCHP_TWO_SIDED 0
#define CCHP_GREATER 1
#define CCHP_LESS 2

typedef struct cchp_scenario cchp_scenario;
typedef struct cchp_front cchp_front;
typedef struct cchp_run cchp_run;

const char* cchp_version(void);

/* Message for the last failed call on this thread; never NULL. */
const char* cchp_last_error(void);

/* ---- Scenarios ---- */

int cchp_scenario_parse(const char* json_text, const char* origin, cchp_scenario** out);
int cchp_scenario_load(const char* path, cchp_scenario** out);
void cchp_scenario_free(cchp_scenario* sc);

/* Valid until the scenario is freed. */
const char* cchp_scenario_name(const cchp_scenario* sc);
int cchp_scenario_num_periods(const cchp_scenario* sc, size_t* out);
int cchp_scenario_set_case(cchp_scenario* sc, int op_case);
int cchp_scenario_set_interpretation(cchp_scenario* sc, int interpretation);

/* Objectives of the separate-production reference system, (cost, pec, cde). */
int cchp_scenario_reference(const cchp_scenario* sc, double objectives[3]);

/* ---- Solvers ---- */

typedef struct cchp_gde3_params {
    size_t pop_size;
    size_t max_iters;
    double f;
    double cr;
    uint64_t seed;
    int bcs_mode;
} cchp_gde3_params;

typedef struct cchp_nsga2_params {
    size_t pop_size;
    size_t max_gens;
    double crossover_prob;
    double crossover_dist_index;
    double mutation_prob; /* negative selects the 1/dimension default */
    double mutation_dist_index;
    uint64_t seed;
} cchp_nsga2_params;

void cchp_gde3_params_init(cchp_gde3_params* p);
void cchp_nsga2_params_init(cchp_nsga2_params* p);

int cchp_solve_gde3(const cchp_scenario* sc, const cchp_gde3_params* params, cchp_run** out);
int cchp_solve_nsga2(const cchp_scenario* sc, const cchp_nsga2_params* params, cchp_front** out);

/* Exhaustive grid oracle; requires a single-period scenario. */
int cchp_oracle_front(const cchp_scenario* sc, size_t resolution, cchp_front** out);

/* ---- Run results ---- */

/* 1 when the run found at least one feasible solution, else 0. */
int cchp_run_feasible(const cchp_run* run);

/* Copy of the solution front (empty when infeasible). */
int cchp_run_front(const cchp_run* run, cchp_front** out);

/* Least-violating individual's (electric deficit, heat deficit, total). */
int cchp_run_violation_report(const cchp_run* run, double out[3]);

int cchp_run_telemetry_count(const cchp_run* run, size_t* out);
int cchp_run_telemetry(const cchp_run* run, size_t index, size_t* iteration,
                       size_t* feasible_count, size_t* front_size, double* least_violation);
void cchp_run_free(cchp_run* run);

/* ---- Fronts ---- */

size_t cchp_front_size(const cchp_front* front);

/* Decision vector length (3 per period). */
int cchp_front_dimension(const cchp_front* front, size_t* out);

/* Borrowed pointer, valid until the front is freed. */
int cchp_front_decision(const cchp_front* front, size_t index, const double** data, size_t* len);
int cchp_front_objectives(const cchp_front* front, size_t index, double out[3]);
int cchp_front_violation(const cchp_front* front, size_t index, double* out);

/* Index of the best-compromise member under the given mode. */
int cchp_front_best_compromise(const cchp_front* front, int bcs_mode, size_t* index);

int cchp_front_save_csv(const cchp_front* front, const char* path);
int cchp_front_load_csv(const char* path, cchp_front** out);
void cchp_front_free(cchp_front* front);

/* ---- Indicators ---- */

/* Hypervolume and generalized spread for n fronts normalized jointly;
 * hv_out and spread_out receive n values each. */
int cchp_evaluate_indicators(const cchp_front* const* fronts, size_t n, double* hv_out,
                             double* spread_out);

/* Paired signed-rank test; *defined is 0 when every difference is zero
 * (p_out is then meaningless). */
int cchp_wilcoxon(const double* a, const double* b, size_t n, int alternative, double* p_out,
                  int* defined);

#ifdef __cplusplus
}
#endif

#endif /* CCHPOPT_H */
