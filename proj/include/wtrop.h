/* C interface to the Welschinger invariant engine.
 *
 * All functions returning wtrop_status use:
 *   WTROP_OK               success
 *   WTROP_ERR_INVALID      invalid argument or surface specification
 *   WTROP_ERR_INTERNAL     broken internal invariant (a bug, not bad input)
 * On failure wtrop_last_error() returns a thread-local message.
 *
 * Strings returned as char* are heap-allocated; release them with
 * wtrop_string_free(). Handles are opaque and freed with their *_free call.
 */

#ifndef WTROP_H
#define WTROP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wtrop_status {
  WTROP_OK = 0,
  WTROP_ERR_INVALID = 2,
  WTROP_ERR_INTERNAL = 3
} wtrop_status;

typedef enum wtrop_surface {
  WTROP_SURFACE_P2 = 0,
  WTROP_SURFACE_P1XP1 = 1,
  WTROP_SURFACE_BL1 = 2,
  WTROP_SURFACE_BL2 = 3,
  WTROP_SURFACE_BL3 = 4
} wtrop_surface;

typedef struct wtrop_run wtrop_run;
typedef struct wtrop_result wtrop_result;
typedef struct wtrop_enumeration wtrop_enumeration;

const char* wtrop_version(void);
const char* wtrop_last_error(void);
void wtrop_string_free(char* s);

/* --- run configuration --------------------------------------------------- */

wtrop_run* wtrop_run_new(void);
void wtrop_run_free(wtrop_run* run);

/* d is the degree for p2/bl1/bl2/bl3; d1,d2 the bidegree for p1xp1; d1..d3
 * the blown-up multiplicities for bl1..bl3. Unused degrees are ignored. */
wtrop_status wtrop_run_set_surface(wtrop_run* run, wtrop_surface kind, int d, int d1, int d2,
                                   int d3);
wtrop_status wtrop_run_set_imaginary_pairs(wtrop_run* run, int r2);
wtrop_status wtrop_run_set_lambda(wtrop_run* run, int64_t a, int64_t b);
/* 1-based indices of the real-point segment set W; count 0 restores the
 * default {1..r'}. */
wtrop_status wtrop_run_set_marking(wtrop_run* run, const int32_t* indices, size_t count);
wtrop_status wtrop_run_set_jobs(wtrop_run* run, int jobs);
wtrop_status wtrop_run_set_svg(wtrop_run* run, int enabled);

/* Polygon admissibility data: boundary lattice points and the largest r''. */
wtrop_status wtrop_run_query(const wtrop_run* run, int64_t* boundary_points, int64_t* r2_max);

/* --- computation ---------------------------------------------------------- */

wtrop_status wtrop_compute(const wtrop_run* run, wtrop_result** out);
void wtrop_result_free(wtrop_result* res);
int64_t wtrop_result_welschinger(const wtrop_result* res);
int32_t wtrop_result_r_real(const wtrop_result* res);
int32_t wtrop_result_r_imag(const wtrop_result* res);
uint64_t wtrop_result_paths_total(const wtrop_result* res);
uint64_t wtrop_result_subdivisions_total(const wtrop_result* res);
uint64_t wtrop_result_consistent(const wtrop_result* res);
uint64_t wtrop_result_zero_weight(const wtrop_result* res);
char* wtrop_result_lambda(const wtrop_result* res); /* "a:b" */
char* wtrop_result_json(const wtrop_result* res);

/* --- per-subdivision enumeration ------------------------------------------ */

wtrop_status wtrop_enumerate(const wtrop_run* run, wtrop_enumeration** out);
void wtrop_enumeration_free(wtrop_enumeration* e);
size_t wtrop_enumeration_count(const wtrop_enumeration* e);
int64_t wtrop_enumeration_welschinger(const wtrop_enumeration* e);
char* wtrop_enumeration_json(const wtrop_enumeration* e); /* summary + records */
char* wtrop_enumeration_record_json(const wtrop_enumeration* e, size_t index);
/* Empty string unless the run had SVG rendering enabled. */
char* wtrop_enumeration_record_svg(const wtrop_enumeration* e, size_t index);

/* --- cross checks ---------------------------------------------------------- */

/* Rational plane curve count by the classical recursion; degree 1..8. */
wtrop_status wtrop_kontsevich(int degree, int64_t* out);
/* Total tropical multiplicity of the complex count; p2 runs only. */
wtrop_status wtrop_complex_count(const wtrop_run* run, int64_t* out);
/* suite: "paper", "invariance", or "oracle"; format: "text" or "json".
 * *pass is 1 when every case of the suite passed. */
wtrop_status wtrop_verify(const char* suite, const char* format, int jobs, int* pass,
                          char** report);

#ifdef __cplusplus
}
#endif

#endif /* WTROP_H */
