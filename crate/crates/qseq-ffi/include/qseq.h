/* C interface for the qseq library (q-convex sequence analysis). */

#pragma once

/* Generated with cbindgen:0.29.4 */

/* This file is generated by cbindgen from qseq-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every qseq function.
typedef enum QseqStatus {
  // Success.
  QSEQ_STATUS_OK = 0,
  // Null pointer, bad buffer length, or otherwise malformed call.
  QSEQ_STATUS_INVALID_ARGUMENT = 1,
  // An argument lies outside the operation's domain.
  QSEQ_STATUS_DOMAIN_ERROR = 2,
  // Arguments are valid but violate a precondition.
  QSEQ_STATUS_PRECONDITION_ERROR = 3,
  // Fixed-point iteration hit the iteration cap.
  QSEQ_STATUS_NO_CONVERGENCE = 4,
} QseqStatus;

// Verdict of a classification at a given q.
typedef enum QseqVerdict {
  QSEQ_VERDICT_Q_CONVEX = 0,
  QSEQ_VERDICT_Q_CONCAVE = 1,
  QSEQ_VERDICT_Q_AFFINE = 2,
  QSEQ_VERDICT_NEITHER = 3,
} QseqVerdict;

// Provenance of a minimax-constant bound.
typedef enum QseqBoundSource {
  QSEQ_BOUND_SOURCE_ARITHMETIC_EXACT = 0,
  QSEQ_BOUND_SOURCE_GEOMETRIC_EXACT = 1,
  QSEQ_BOUND_SOURCE_MAX_EXACT = 2,
  QSEQ_BOUND_SOURCE_POWER_LOWER = 3,
  QSEQ_BOUND_SOURCE_POWER_LOWER_ODD = 4,
} QseqBoundSource;

// Opaque handle to a min-of-averages fixed-point problem.
typedef struct QseqProblem QseqProblem;

// Opaque handle to a windowed sequence.
typedef struct QseqSequence QseqSequence;

// Residuals of the six T/U product identities at (i, j, k, q); all are
// zero up to rounding for every input.
typedef struct QseqIdentityResiduals {
  double idu_u;
  double idu_t;
  double ut_u;
  double ut_t;
  double ut1;
  double ut2;
  // Largest participating term magnitude, for relative comparisons.
  double scale;
} QseqIdentityResiduals;

// Classification result. The thresholds are the min/max chord ratios and
// are present only when the interior is positive.
typedef struct QseqClassification {
  enum QseqVerdict verdict;
  bool has_thresholds;
  double convexity_threshold;
  double concavity_threshold;
} QseqClassification;

// Coefficients of the representation p_i = a U_{i-start}(q) + b T_{i-start}(q).
typedef struct QseqAffineCoeffs {
  double a;
  double b;
  double q;
  int64_t start;
} QseqAffineCoeffs;

// Lower bounds for the power sum; `odd_bonus` is meaningful only when
// `has_odd_bonus` is set (odd k).
typedef struct QseqFLowerBounds {
  double primary;
  double secondary;
  bool has_odd_bonus;
  double odd_bonus;
  double best;
} QseqFLowerBounds;

// A minimax-constant value with its exactness flag and provenance.
typedef struct QseqBoundReport {
  double value;
  bool exact;
  enum QseqBoundSource source;
} QseqBoundReport;

// Both sides of (m-4+sqrt(2))/(m-2) <= cos(pi/m) for m >= 3.
typedef struct QseqCosineBound {
  double lhs;
  double rhs;
  bool holds;
} QseqCosineBound;

// Lipschitz certificate: q is the maximum chord ratio of the
// zero-extended weights, q_star the operator's Lipschitz constant.
typedef struct QseqCertificate {
  double q;
  double q_star;
  bool is_contraction;
} QseqCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or NULL when
// no failure has been recorded. The pointer stays valid until the next
// failing qseq call on the same thread.
const char *qseq_last_error_message(void);

// Evaluate the first-kind Chebyshev polynomial T_order(x).
//
// # Safety
// `out` must point to writable memory for one double.
enum QseqStatus qseq_cheb_t(int64_t order, double x, double *out);

// Evaluate the second-kind Chebyshev polynomial U_order(x).
//
// # Safety
// `out` must point to writable memory for one double.
enum QseqStatus qseq_cheb_u(int64_t order, double x, double *out);

// Largest root of T_order, cos(pi/(2 order)); requires order >= 1.
//
// # Safety
// `out` must point to writable memory for one double.
enum QseqStatus qseq_largest_root_t(int64_t order, double *out);

// Largest root of U_order, cos(pi/(order+1)); requires order >= 1.
//
// # Safety
// `out` must point to writable memory for one double.
enum QseqStatus qseq_largest_root_u(int64_t order, double *out);

// floor(pi/arccos(x)) for 0 <= x < 1, the last strictly decreasing index
// of (T_k(x))_{k>=1}.
//
// # Safety
// `out` must point to writable memory for one int64.
enum QseqStatus qseq_tau(double x, int64_t *out);

// Evaluate the identity residual record at (i, j, k, q).
//
// # Safety
// `out` must point to writable memory for one `QseqIdentityResiduals`.
enum QseqStatus qseq_identity_residuals(int64_t i,
                                        int64_t j,
                                        int64_t k,
                                        double q,
                                        struct QseqIdentityResiduals *out);

// Create a sequence on the window {start, ..., start + len - 1}; len must
// be at least 3 and every value finite.
//
// # Safety
// `values` must point to `len` readable doubles; `out` must be writable.
enum QseqStatus qseq_sequence_new(int64_t start,
                                  const double *values,
                                  uintptr_t len,
                                  struct QseqSequence **out);

// Release a sequence handle; NULL is ignored.
//
// # Safety
// `seq` must be a pointer from a qseq function, not yet freed.
void qseq_sequence_free(struct QseqSequence *seq);

// Window start index of a sequence.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_sequence_start(const struct QseqSequence *seq, int64_t *out);

// Number of values in a sequence.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_sequence_len(const struct QseqSequence *seq, uintptr_t *out);

// Copy the sequence values into `buf` (length must equal the sequence
// length).
//
// # Safety
// `seq` must be a live handle; `buf` must hold `len` writable doubles.
enum QseqStatus qseq_sequence_values(const struct QseqSequence *seq, double *buf, uintptr_t len);

// Chord ratios (p_{i-1}+p_{i+1})/(2 p_i) over the interior; `buf` length
// must equal sequence length - 2. Requires a positive interior.
//
// # Safety
// `seq` must be a live handle; `buf` must hold `len` writable doubles.
enum QseqStatus qseq_sequence_chord_ratios(const struct QseqSequence *seq,
                                           double *buf,
                                           uintptr_t len);

// Classify a sequence at q (q-convex / q-concave / q-affine / neither).
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_sequence_classify(const struct QseqSequence *seq,
                                       double q,
                                       struct QseqClassification *out);

// Materialize a q-affine sequence from coefficients on {start, ..., end}.
//
// # Safety
// `out` must be writable.
enum QseqStatus qseq_make_affine(struct QseqAffineCoeffs coeffs,
                                 int64_t end,
                                 struct QseqSequence **out);

// Recover the (a, b) coefficients of a q-affine sequence.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_affine_coeffs(const struct QseqSequence *seq,
                                   double q,
                                   struct QseqAffineCoeffs *out);

// q-affine chord through (j, p_j) and (k, p_k) of a q-concave sequence;
// requires q > cos(pi/(k-j)).
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_support_chord(const struct QseqSequence *seq,
                                   double q,
                                   int64_t j,
                                   int64_t k,
                                   struct QseqSequence **out);

// Envelope of dominating q-affine members, one per consecutive index pair;
// `buf` length must equal sequence length - 1.
//
// # Safety
// `seq` must be a live handle; `buf` must hold `len` writable entries.
enum QseqStatus qseq_affine_envelope(const struct QseqSequence *seq,
                                     double q,
                                     struct QseqAffineCoeffs *buf,
                                     uintptr_t len);

// Index-wise minimum of two sequences on the same window.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum QseqStatus qseq_pointwise_min(const struct QseqSequence *a,
                                   const struct QseqSequence *b,
                                   struct QseqSequence **out);

// Index-wise maximum of two sequences on the same window.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum QseqStatus qseq_pointwise_max(const struct QseqSequence *a,
                                   const struct QseqSequence *b,
                                   struct QseqSequence **out);

// Power mean with exponent r of positive entries; r may be -inf (min),
// 0 (geometric), or +inf (max).
//
// # Safety
// `values` must point to `len` readable doubles; `out` must be writable.
enum QseqStatus qseq_power_mean(double r, const double *values, uintptr_t len, double *out);

// The sum u_1^r + sum (1/u_i + u_{i+1})^r + u_k^{-r} for r > 0.
//
// # Safety
// `values` must point to `len` readable doubles; `out` must be writable.
enum QseqStatus qseq_f_rk(double r, const double *values, uintptr_t len, double *out);

// Lower bounds for the k-variable power sum at exponent r > 0.
//
// # Safety
// `out` must be writable.
enum QseqStatus qseq_f_lower_bound(double r, uintptr_t k, struct QseqFLowerBounds *out);

// The largest constant below every admissible sequence's r-mean of chord
// ratios on the window {n, ..., m}.
//
// # Safety
// `out` must be writable.
enum QseqStatus qseq_c_constant(double r, int64_t n, int64_t m, struct QseqBoundReport *out);

// Apply the r-mean to the chord ratios of a sequence with nonnegative
// endpoints and positive interior.
//
// # Safety
// `seq` must be a live handle; `out` must be writable.
enum QseqStatus qseq_mean_of_chord_ratios(double r, const struct QseqSequence *seq, double *out);

// Sequence witnessing (or approaching) the sharpness of the minimax
// constant for exponent r on {n, ..., m}.
//
// # Safety
// `out` must be writable.
enum QseqStatus qseq_sharpness_witness(double r,
                                       int64_t n,
                                       int64_t m,
                                       double epsilon,
                                       struct QseqSequence **out);

// Evaluate the cosine inequality at m.
//
// # Safety
// `out` must be writable.
enum QseqStatus qseq_cosine_bound_check(int64_t m, struct QseqCosineBound *out);

// The weights i(n+1-i) into `buf` of length `len == n`.
//
// # Safety
// `buf` must hold `len` writable doubles.
enum QseqStatus qseq_default_weights(uintptr_t n, double *buf, uintptr_t len);

// max_i |values_i| / weights_i over positive weights.
//
// # Safety
// `weights` and `values` must each point to `len` readable doubles; `out`
// must be writable.
enum QseqStatus qseq_weighted_norm(const double *weights,
                                   const double *values,
                                   uintptr_t len,
                                   double *out);

// Create a problem of dimension n. `gamma` must have length
// floor((n+1)/2). Pass `weights = NULL` (with `weights_len = 0`) for the
// default weights i(n+1-i); otherwise `weights_len` must equal n.
//
// # Safety
// `gamma` must point to `gamma_len` readable doubles, `weights` to
// `weights_len` when non-null; `out` must be writable.
enum QseqStatus qseq_problem_new(uintptr_t n,
                                 const double *gamma,
                                 uintptr_t gamma_len,
                                 const double *weights,
                                 uintptr_t weights_len,
                                 struct QseqProblem **out);

// Release a problem handle; NULL is ignored.
//
// # Safety
// `prob` must be a pointer from `qseq_problem_new`, not yet freed.
void qseq_problem_free(struct QseqProblem *prob);

// Dimension n of a problem.
//
// # Safety
// `prob` must be a live handle; `out` must be writable.
enum QseqStatus qseq_problem_dimension(const struct QseqProblem *prob, uintptr_t *out);

// Lipschitz certificate of a problem.
//
// # Safety
// `prob` must be a live handle; `out` must be writable.
enum QseqStatus qseq_problem_certificate(const struct QseqProblem *prob,
                                         struct QseqCertificate *out);

// Apply the operator once; `input` and `output` both have length
// `len == n` and may not alias.
//
// # Safety
// `input` must point to `len` readable doubles and `output` to `len`
// writable doubles; `prob` must be a live handle.
enum QseqStatus qseq_problem_apply(const struct QseqProblem *prob,
                                   const double *input,
                                   double *output,
                                   uintptr_t len);

// Banach iteration from 0 until the certified error drops below `tol`.
// `point` receives the fixed point (length `len == n`). `iterations` and
// `residual` are optional (may be NULL).
//
// # Safety
// `prob` must be a live handle; `point` must hold `len` writable doubles;
// `iterations`/`residual` must be writable when non-null.
enum QseqStatus qseq_solve_fixed_point(const struct QseqProblem *prob,
                                       double tol,
                                       uintptr_t max_iter,
                                       double *point,
                                       uintptr_t len,
                                       uintptr_t *iterations,
                                       double *residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
