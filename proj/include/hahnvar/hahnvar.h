/* hahnvar: Hahn quantum calculus and higher-order quantum variational
 * problems on truncated sigma-lattices. Plain C interface.
 *
 * Every call returns an hv_status. On failure the thread-local message from
 * hv_last_error() describes the cause; out-parameters are left untouched.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function (free functions accept NULL). */
#ifndef HAHNVAR_H
#define HAHNVAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HAHNVAR_BUILDING_LIBRARY)
#    define HV_API __declspec(dllexport)
#  else
#    define HV_API __declspec(dllimport)
#  endif
#else
#  define HV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hv_status {
  HV_OK = 0,
  HV_ERR_INVALID_ARGUMENT = 1,
  HV_ERR_SYNTAX = 2,
  HV_ERR_UNKNOWN_IDENTIFIER = 3,
  HV_ERR_UNBOUND_VARIABLE = 4,
  HV_ERR_ARITY = 5,
  HV_ERR_DOMAIN = 6,
  HV_ERR_NOT_DIFFERENTIABLE = 7,
  HV_ERR_NON_FINITE = 8,
  HV_ERR_DEGENERATE_DENOMINATOR = 9,
  HV_ERR_INSUFFICIENT_DEPTH = 10,
  HV_ERR_NOT_A_VARIATION = 11,
  HV_ERR_INTERNAL = 99
} hv_status;

/* Message of the last failure on this thread ("" after success). */
HV_API const char* hv_last_error(void);
/* Byte offset of the last syntax error, or -1. */
HV_API int hv_last_error_position(void);
HV_API const char* hv_status_name(hv_status status);
HV_API const char* hv_version(void);

/* Lattice point identity: origin a, origin b, or the fixed point omega0. */
typedef enum hv_origin { HV_ORIGIN_A = 0, HV_ORIGIN_B = 1, HV_ORIGIN_OMEGA0 = 2 } hv_origin;

typedef struct hv_point {
  hv_origin origin;
  int n;
} hv_point;

typedef struct hv_series {
  double value;
  int terms_used;
  double tail_bound;
  int converged;
} hv_series;

/* Which calculus an operator uses: Hahn (q, omega), Jackson (q, omega
 * ignored) or forward differences (step omega, q ignored). */
typedef enum hv_mode { HV_MODE_HAHN = 0, HV_MODE_JACKSON = 1, HV_MODE_FORWARD = 2 } hv_mode;

/* ---- calculus on expressions of t ---- */

HV_API hv_status hv_omega0(double q, double omega, double* out);
HV_API hv_status hv_sigma(double q, double omega, double t, double* out);
HV_API hv_status hv_eval_expr(const char* expr, double t, double* out);
/* D^order f(t) for f given as an expression of t; order 0 evaluates f. */
HV_API hv_status hv_deriv(hv_mode mode, double q, double omega, const char* expr, int order,
                          double t, double* out);
/* Integral of f from a to b (for HV_MODE_FORWARD, the Norlund sum). */
HV_API hv_status hv_integrate(hv_mode mode, double q, double omega, const char* expr, double a,
                              double b, double tol, int max_terms, hv_series* out);

/* ---- problems and candidates ---- */

typedef struct hv_problem hv_problem;
typedef struct hv_candidate hv_candidate;

/* alpha and beta each hold r values. */
HV_API hv_status hv_problem_create(double q, double omega, int r, double a, double b,
                                   const double* alpha, const double* beta,
                                   const char* lagrangian, int maximize, hv_problem** out);
/* The discontinuous-minimizer example: q = omega = 1/2 on [-1, 1]. */
HV_API hv_status hv_problem_discontinuous_example(hv_problem** out);
HV_API void hv_problem_free(hv_problem* problem);
HV_API hv_status hv_problem_omega0(const hv_problem* problem, double* out);
HV_API hv_status hv_problem_order(const hv_problem* problem, int* out);
/* Position of a lattice point of the problem. */
HV_API hv_status hv_problem_point(const hv_problem* problem, hv_point p, double* out);

HV_API hv_status hv_candidate_from_expr(const char* expr, hv_candidate** out);
/* "ystar" or "zero". */
HV_API hv_status hv_candidate_builtin(const char* name, hv_candidate** out);
/* Table on the problem's lattice of the given depth. Rows are (origin, n,
 * value) and must cover n = 0..depth on every orbit that does not start at
 * omega0. The value at omega0 is `omega0_value` unless a row with origin
 * HV_ORIGIN_OMEGA0 overrides it. */
HV_API hv_status hv_candidate_from_table(const hv_problem* problem, int depth,
                                         const hv_point* points, const double* values,
                                         size_t count, double omega0_value, hv_candidate** out);
HV_API void hv_candidate_free(hv_candidate* candidate);
HV_API hv_status hv_candidate_value(const hv_problem* problem, const hv_candidate* candidate,
                                    hv_point p, double* out);

/* (t, v_0, ..., v_r) into out[0 .. r + 1]. */
HV_API hv_status hv_trajectory(const hv_problem* problem, const hv_candidate* y, hv_point p,
                               int depth, double* out, size_t out_len);

HV_API hv_status hv_functional_value(const hv_problem* problem, const hv_candidate* y, double tol,
                                     int max_terms, hv_series* out);
HV_API hv_status hv_first_variation(const hv_problem* problem, const hv_candidate* y,
                                    const hv_candidate* eta, double tol, int max_terms,
                                    hv_series* out);
HV_API hv_status hv_first_variation_fd(const hv_problem* problem, const hv_candidate* y,
                                       const hv_candidate* eta, double eps, double tol,
                                       int max_terms, double* out);

/* Boundary check; *ok is 1 when every condition holds within tol. The
 * violation count is written to *violations when non-NULL. */
HV_API hv_status hv_is_admissible(const hv_problem* problem, const hv_candidate* y, double tol,
                                  int* ok, size_t* violations);
HV_API hv_status hv_is_variation(const hv_problem* problem, const hv_candidate* eta, double tol,
                                 int* ok, size_t* violations);

/* E-L residual at p on the Hahn, Jackson (omega treated as 0) or forward
 * (q treated as 1, step omega) lattice of the given depth. */
HV_API hv_status hv_el_residual(const hv_problem* problem, const hv_candidate* y, hv_mode mode,
                                hv_point p, int depth, double* out);

/* ---- E-L reports ---- */

typedef struct hv_el_report hv_el_report;

typedef struct hv_el_summary {
  double max_abs_residual;
  size_t residual_count;
  size_t violation_count;
  int depth_used;
  int omega0_included;
  int has_omega0_residual;
  double omega0_residual;
  double tol;
  int passes;
} hv_el_summary;

typedef struct hv_violation {
  int index;
  hv_origin endpoint;
  double error;
} hv_violation;

HV_API hv_status hv_el_report_create(const hv_problem* problem, const hv_candidate* y, int depth,
                                     double tol, int include_omega0, hv_el_report** out);
HV_API void hv_el_report_free(hv_el_report* report);
HV_API hv_status hv_el_report_summary(const hv_el_report* report, hv_el_summary* out);
HV_API hv_status hv_el_report_residual(const hv_el_report* report, size_t i, hv_point* point,
                                       double* t, double* residual);
HV_API hv_status hv_el_report_violation(const hv_el_report* report, size_t i, hv_violation* out);

/* ---- direct minimization ---- */

typedef struct hv_minimize_result hv_minimize_result;

typedef struct hv_minimize_summary {
  double objective;
  double max_boundary_error;
  double penalty_weight;
  int iterations;
  int converged;
  size_t history_length;
  size_t point_count;
} hv_minimize_summary;

typedef struct hv_history_entry {
  int iteration;
  double objective;
  double penalty_weight;
} hv_history_entry;

HV_API hv_status hv_minimize(const hv_problem* problem, int depth, uint64_t seed, int max_iters,
                             double tol, int max_terms, hv_minimize_result** out);
HV_API void hv_minimize_result_free(hv_minimize_result* result);
HV_API hv_status hv_minimize_summary_get(const hv_minimize_result* result,
                                         hv_minimize_summary* out);
HV_API hv_status hv_minimize_history(const hv_minimize_result* result, size_t i,
                                     hv_history_entry* out);
/* Optimized table rows: live orbit points in order, then omega0. */
HV_API hv_status hv_minimize_point(const hv_minimize_result* result, size_t i, hv_point* point,
                                   double* t, double* value);

/* ---- demos ---- */

/* Largest |E-L residual| of the clamped quartic for the beam problem with
 * rigidity e and load xi. */
HV_API hv_status hv_beam_max_residual(double q, double omega, double e, double xi, double* out);
/* Functional values of `count` random admissible tables of the problem. */
HV_API hv_status hv_nonnegativity_sweep(const hv_problem* problem, int count, uint64_t seed,
                                        int depth, double* min_value, int* negative);

#ifdef __cplusplus
}
#endif

#endif /* HAHNVAR_H */
