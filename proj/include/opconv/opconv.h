#ifndef OPCONV_H
#define OPCONV_H

/* C interface to the operator-convexity toolkit: Hermitian matrix calculus,
 * divergence lower bounds on the modulus of convexity, the sharpened
 * arithmetic-harmonic inequality, entropy concavity margins, and randomized
 * counterexample mining.
 *
 * Conventions: all handles are opaque and freed by their *_free function;
 * every fallible call returns an opconv_status, with a human-readable detail
 * from opconv_last_error() (thread-local); strings returned through char**
 * are owned by the caller and released with opconv_string_free().
 */

#include <stdint.h>

#if defined(_WIN32)
#ifdef OPCONV_BUILDING
#define OPCONV_API __declspec(dllexport)
#else
#define OPCONV_API __declspec(dllimport)
#endif
#else
#define OPCONV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opconv_status {
  OPCONV_OK = 0,
  OPCONV_ERR_NULL_ARGUMENT = 1,
  OPCONV_ERR_INVALID_ARGUMENT = 2,
  OPCONV_ERR_UNKNOWN_FUNCTION = 3,
  OPCONV_ERR_DOMAIN = 4,
  OPCONV_ERR_PARSE = 5,
  OPCONV_ERR_NUMERIC = 6
} opconv_status;

typedef struct opconv_matrix opconv_matrix;     /* Hermitian matrix */
typedef struct opconv_function opconv_function; /* scalar function descriptor */

typedef struct opconv_psd_verdict {
  double min_eigenvalue;
  double tolerance; /* tol_scale * (1 + gap_norm) */
  int is_psd;       /* min_eigenvalue >= -tolerance */
  double gap_norm;  /* largest |eigenvalue| */
} opconv_psd_verdict;

OPCONV_API const char* opconv_version(void);
OPCONV_API const char* opconv_last_error(void);
OPCONV_API void opconv_string_free(char* text);

/* ---- matrices ---------------------------------------------------------- */

/* Builds a dim x dim Hermitian matrix from row-major parts (imag may be
 * NULL). Inputs are symmetrized; asymmetry beyond 1e-4 is rejected. */
OPCONV_API opconv_status opconv_matrix_create(int dim, const double* real_rowmajor,
                                              const double* imag_rowmajor,
                                              opconv_matrix** out);

/* Parses {"dim": n, "real": [[...]], "imag": [[...]]}; `max_asymmetry`
 * (optional) receives the raw deviation from conjugate symmetry. */
OPCONV_API opconv_status opconv_matrix_parse(const char* json_text,
                                             opconv_matrix** out,
                                             double* max_asymmetry);
OPCONV_API opconv_status opconv_matrix_serialize(const opconv_matrix* m,
                                                 char** json_out);
OPCONV_API void opconv_matrix_free(opconv_matrix* m);
OPCONV_API int opconv_matrix_dim(const opconv_matrix* m);
OPCONV_API opconv_status opconv_matrix_entry(const opconv_matrix* m, int row,
                                             int col, double* re, double* im);
OPCONV_API opconv_status opconv_matrix_min_eigenvalue(const opconv_matrix* m,
                                                      double* out);
OPCONV_API opconv_status opconv_matrix_psd_certificate(const opconv_matrix* m,
                                                       double tol_scale,
                                                       opconv_psd_verdict* out);
/* OPCONV_OK when m is PSD with unit trace (a quantum state), otherwise
 * OPCONV_ERR_INVALID_ARGUMENT. */
OPCONV_API opconv_status opconv_matrix_is_density(const opconv_matrix* m);

/* ---- scalar function catalog ------------------------------------------- */

/* Tokens: square, xlogx, neglog, resolvent:<s>, one_plus_x_log, g_counter. */
OPCONV_API opconv_status opconv_function_lookup(const char* token,
                                                opconv_function** out);
OPCONV_API void opconv_function_free(opconv_function* f);
OPCONV_API int opconv_function_is_operator_convex(const opconv_function* f);
OPCONV_API opconv_status opconv_function_value(const opconv_function* f, double x,
                                               double* out);

/* ---- matrix calculus and inequalities ---------------------------------- */

OPCONV_API opconv_status opconv_apply_function(const opconv_function* f,
                                               const opconv_matrix* h,
                                               opconv_matrix** out);
OPCONV_API opconv_status opconv_bregman_divergence(const opconv_function* f,
                                                   const opconv_matrix* a,
                                                   const opconv_matrix* b,
                                                   opconv_matrix** out);
OPCONV_API opconv_status opconv_modulus_of_convexity(const opconv_function* f,
                                                     const opconv_matrix* a,
                                                     const opconv_matrix* b,
                                                     double c, opconv_matrix** out);
OPCONV_API opconv_status opconv_lower_bound_rhs(const opconv_function* f,
                                                const opconv_matrix* a,
                                                const opconv_matrix* b, double c,
                                                opconv_matrix** out);
OPCONV_API opconv_status opconv_lower_bound_gap(const opconv_function* f,
                                                const opconv_matrix* a,
                                                const opconv_matrix* b, double c,
                                                opconv_matrix** out);
OPCONV_API opconv_status opconv_strengthened_ah_gap(const opconv_matrix* a,
                                                    const opconv_matrix* b,
                                                    opconv_matrix** out);

/* ---- entropy ------------------------------------------------------------ */

/* rho/sigma must pass opconv_matrix_is_density. Relative-entropy results may
 * be +infinity (support violation). */
OPCONV_API opconv_status opconv_von_neumann_entropy(const opconv_matrix* rho,
                                                    double* out);
OPCONV_API opconv_status opconv_relative_entropy(const opconv_matrix* rho,
                                                 const opconv_matrix* sigma,
                                                 double* out);
OPCONV_API opconv_status opconv_trace_distance(const opconv_matrix* rho,
                                               const opconv_matrix* sigma,
                                               double* out);

/* ---- drivers ------------------------------------------------------------ */

typedef struct opconv_verify_options {
  const char* suite;     /* theorem1 | ah | bregman | entropy | dilation */
  const char* functions; /* comma list; NULL for the suite default */
  const char* c_values;  /* comma list; NULL for the default grid */
  const char* dims;      /* "a..b"; NULL for 1..8 */
  uint64_t seed;
  int trials;  /* <= 0 selects the default (500) */
  double tol;  /* <= 0 selects the default (1e-8) */
} opconv_verify_options;

OPCONV_API opconv_status opconv_run_verify(const opconv_verify_options* options,
                                           char** report_json,
                                           int* violation_count);

OPCONV_API opconv_status opconv_run_gap(const opconv_matrix* a,
                                        const opconv_matrix* b, double c,
                                        const opconv_function* f, double tol,
                                        char** report_json, int* is_violation);

OPCONV_API opconv_status opconv_run_entropy(const opconv_matrix* rho,
                                            const opconv_matrix* sigma, double c,
                                            char** report_json, int* is_violation);

typedef struct opconv_mine_options {
  const char* function; /* catalog token */
  const char* dims;     /* "a..b"; NULL for 1..4 */
  const char* c_values; /* comma list; NULL for the default off-midpoint grid */
  uint64_t seed;
  int trials; /* <= 0 selects the default (500) */
} opconv_mine_options;

OPCONV_API opconv_status opconv_run_mine(const opconv_mine_options* options,
                                         char** report_json, int* found);

#ifdef __cplusplus
}
#endif

#endif /* OPCONV_H */
