/* dynr: canonical dynamical r-matrix verification library, C interface.
 *
 * All functions return DYNR_OK (0) on success or a negative status code.
 * Failed calls record a message retrievable with dynr_last_error(). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with dynr_string_free().
 */
#ifndef DYNR_H
#define DYNR_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef DYNR_BUILD
#    define DYNR_API __declspec(dllexport)
#  else
#    define DYNR_API __declspec(dllimport)
#  endif
#else
#  ifdef DYNR_BUILD
#    define DYNR_API __attribute__((visibility("default")))
#  else
#    define DYNR_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int dynr_status;

enum {
  DYNR_OK = 0,
  DYNR_E_DIMENSION = -1,
  DYNR_E_SINGULAR_FORM = -2,
  DYNR_E_POLE = -3,
  DYNR_E_DOMAIN = -4,
  DYNR_E_CLUSTER_SEPARATION = -5,
  DYNR_E_SINGULAR_RESOLVENT = -6,
  DYNR_E_RADIUS = -7,
  DYNR_E_NOT_DIAGONALIZABLE = -8,
  DYNR_E_NOT_EIGENVECTOR = -9,
  DYNR_E_PARSE = -10,
  DYNR_E_OVERFLOW = -11,
  DYNR_E_INVALID_ARGUMENT = -12,
  DYNR_E_INTERNAL = -99
};

/* Opaque handle to an algebra (catalog entry or parsed file). */
typedef struct dynr_algebra dynr_algebra;

DYNR_API const char* dynr_version(void);

/* Message from the most recent failing call on this thread. */
DYNR_API const char* dynr_last_error(void);

DYNR_API const char* dynr_status_name(dynr_status status);

DYNR_API void dynr_string_free(char* s);

/* name: abelian(n) | sl2 | sl2_real | oscillator | direct_sum(a,b) */
DYNR_API dynr_status dynr_algebra_catalog(const char* name, dynr_algebra** out);

DYNR_API dynr_status dynr_algebra_from_file(const char* path, dynr_algebra** out);

DYNR_API void dynr_algebra_free(dynr_algebra* algebra);

DYNR_API int dynr_algebra_dim(const dynr_algebra* algebra);

/* Basis label of index i (0-based) into caller buffer; truncates if needed. */
DYNR_API dynr_status dynr_algebra_label(const dynr_algebra* algebra, int i, char* buf,
                                        size_t buflen);

/* Axiom residuals as a JSON object; pass set to 0/1. */
DYNR_API dynr_status dynr_validate(const dynr_algebra* algebra, int* pass, char** json);

/* Run verification suites from a JSON configuration:
 * {
 *   "algebra": "sl2",              catalog name or file path
 *   "omega": "random:20:42",       or coordinates / label combination
 *   "method": "spectral",          spectral | contour | taylor
 *   "suites": ["cdybe", ...],      optional; default: every applicable suite
 *   "output": "text" | "json",
 *   "seed": 42, "max_order": 10,
 *   "tol_residual": 1e-8, "delta_pole": 1e-6, "nodes": 64,
 *   "tol_exact": 1e-12, "tol_rank": 1e-9
 * }
 * *output receives the rendered report, *pass the overall verdict. Suites
 * that hit domain violations are reported failed rather than erroring.
 */
DYNR_API dynr_status dynr_run(const char* config_json, char** output, int* pass);

/* Human-readable list of built-in algebras. */
DYNR_API dynr_status dynr_catalog_list(char** out);

#ifdef __cplusplus
}
#endif

#endif
