/* metriclab: classification of expansive self-maps of metric spaces and
 * desk-scale verification of the theorems that govern them.
 *
 * C interface of the shared library. All functions return an ml_status;
 * results are returned as JSON strings allocated by the library and released
 * with ml_string_free. Handles are opaque and freed with their *_free
 * function. The library keeps a thread-local error message readable via
 * ml_last_error after any failure.
 */
#ifndef METRICLAB_H
#define METRICLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ml_status {
    ML_OK = 0,
    ML_CHECK_FAILED = 1,   /* a verification check did not hold */
    ML_PARSE_ERROR = 2,    /* malformed document or unknown name */
    ML_INVALID_INPUT = 3,  /* structurally broken data or invalid metric */
    ML_DOMAIN_ERROR = 4,   /* precondition violated (empty space, bad epsilon) */
    ML_BUDGET_EXCEEDED = 5 /* enumeration refused; see ml_last_error */
} ml_status;

typedef struct ml_space ml_space;   /* finite metric space */
typedef struct ml_selfmap ml_selfmap;

const char* ml_version(void);

/* Thread-local message describing the most recent failure. */
const char* ml_last_error(void);

void ml_string_free(char* s);

/* ---- spaces and maps ---------------------------------------------------- */

/* Parses { "labels": [...], "dist": [[...]] }. Matrix entries may be numbers
 * or "p/q" strings; any string switches the space to exact-rational mode. */
ml_status ml_space_from_json(const char* json_text, ml_space** out);
void ml_space_free(ml_space* space);

size_t ml_space_size(const ml_space* space);

/* Metric-axiom validation report: { "valid": ..., "violations": [...] }.
 * Returns ML_OK even when axioms are violated; the report carries them. */
ml_status ml_space_validate(const ml_space* space, double tol, char** report_json);

ml_status ml_space_diameter(const ml_space* space, double* out);

/* Minimum epsilon-net: { "centers": [...], "optimal": ... }. Exact up to 20
 * points, greedy upper bound beyond (flagged via "optimal": false). */
ml_status ml_space_epsilon_net(const ml_space* space, double epsilon, char** report_json);

/* Parses { "image": [...] } with 0-based indices into the space. */
ml_status ml_map_from_json(const ml_space* space, const char* json_text, ml_selfmap** out);
void ml_map_free(ml_selfmap* map);

/* T^n x. */
ml_status ml_map_iterate(const ml_selfmap* map, size_t x, uint64_t n, size_t* out);

/* ---- classification ----------------------------------------------------- */

/* { "class": ..., "E": ..., "witnesses": [...] }. Classes: NotExpansive,
 * Isometry, ProperNotStrict, StrictNotAnticontraction, Anticontraction. */
ml_status ml_classify(const ml_space* space, const ml_selfmap* map, double tol,
                      char** report_json);

ml_status ml_ratio_profile(const ml_space* space, const ml_selfmap* map, char** report_json);

ml_status ml_is_surjective(const ml_space* space, const ml_selfmap* map, char** report_json);

ml_status ml_range_density(const ml_space* space, const ml_selfmap* map, double epsilon,
                           char** report_json);

/* ---- enumeration and theorem checks ------------------------------------- */

/* config_json: { "seed": u64, "tol": real, "budget": u64, "workers": int };
 * all fields optional. */

/* Enumerates every expansive self-map, each tagged with its class. */
ml_status ml_enumerate_expansive(const ml_space* space, const char* config_json,
                                 char** report_json);

ml_status ml_verify_compact_theorem(const ml_space* space, const char* config_json,
                                    char** report_json);

/* Smallest n in [1, max_iter] with d(x, T^n x) <= epsilon. */
ml_status ml_recurrence_search(const ml_space* space, const ml_selfmap* map, size_t x,
                               double epsilon, uint64_t max_iter, char** report_json);

/* ---- dial set ----------------------------------------------------------- */

/* { "n": ..., "x": ..., "y": ... } for e^{in}. */
ml_status ml_dial_point(uint64_t n, char** report_json);

/* Approach sequence toward e^{i target} from continued-fraction convergents
 * of 2*pi: { "indices": [...], "chord_errors": [...], "truncated": ... }. */
ml_status ml_dial_approach(uint64_t target, int count, char** report_json);

ml_status ml_dial_density(uint64_t points, double epsilon, char** report_json);

ml_status ml_dial_limit_point(double epsilon, uint64_t points, char** report_json);

/* Continued fraction of an arbitrary positive x. */
ml_status ml_continued_fraction(double x, int depth, char** report_json);

/* ---- sparse sets on oracles --------------------------------------------- */

/* Oracles: "real-line", "integer-lattice-sup", "geometric", and
 * "bounded-interval"; params_json may carry oracle parameters ({"base": 3}).
 * Builds the greedy sparse set and its anticontraction certificate. Returns
 * ML_CHECK_FAILED when the scan budget runs out (evidence the space is
 * bounded); the report is still produced. */
ml_status ml_sparse_build(const char* oracle_name, const char* params_json, size_t count,
                          uint64_t scan_budget, char** report_json);

/* ---- gallery ------------------------------------------------------------ */

ml_status ml_gallery_list(char** report_json);

ml_status ml_gallery_run(const char* name, const char* params_json, char** report_json);

/* ---- verification suites ------------------------------------------------ */

/* Suites: "compact", "counterexample", "dial", "sparse", "boundedness".
 * Returns ML_OK when every check passed, ML_CHECK_FAILED otherwise; the
 * report lists each check with pass/fail and witnesses. Reports are
 * byte-identical for identical configs. */
ml_status ml_verify(const char* suite, const char* config_json, const char* params_json,
                    char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* METRICLAB_H */
