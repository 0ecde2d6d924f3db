#ifndef NEUTROVAL_H
#define NEUTROVAL_H

/* Generated by cbindgen from neutroval-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Variant selector for the penta and hexa transforms.
 */
#define NV_VARIANT_ONE 1

/**
 * Variant selector for the penta and hexa transforms.
 */
#define NV_VARIANT_TWO 2

/**
 * Result code of a fallible call.
 */
enum NvStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  NV_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  NV_STATUS_NULL_POINTER = 1,
  /**
   * A variant or logic-value code was out of range.
   */
  NV_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A component lies outside [0, 1] beyond tolerance.
   */
  NV_STATUS_OUT_OF_RANGE = 3,
  /**
   * Partition components do not sum to 1 within tolerance.
   */
  NV_STATUS_PARTITION_VIOLATION = 4,
  /**
   * An inverse-transform radicand was negative beyond tolerance.
   */
  NV_STATUS_DISCRIMINANT_NEGATIVE = 5,
  /**
   * Mutually exclusive components are simultaneously nonzero.
   */
  NV_STATUS_EXCLUSIVITY_VIOLATION = 6,
  /**
   * A vector operator input fails its property-block precondition.
   */
  NV_STATUS_PRECONDITION_VIOLATION = 7,
  /**
   * An ambiguity fold did not land on a valid partition.
   */
  NV_STATUS_CONSISTENCY_VIOLATION = 8,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum NvStatus NvStatus;
#else
typedef int32_t NvStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * One of the five logical values.
 */
enum NvLogicValue
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  NV_LOGIC_VALUE_TRUE = 0,
  NV_LOGIC_VALUE_CONTRADICTORY = 1,
  NV_LOGIC_VALUE_HESITANT = 2,
  NV_LOGIC_VALUE_UNKNOWN = 3,
  NV_LOGIC_VALUE_FALSE = 4,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum NvLogicValue NvLogicValue;
#else
typedef int32_t NvLogicValue;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque tolerance policy handle.
 */
typedef struct NvTolerance NvTolerance;

/**
 * Primary triple: degree of truth, indeterminacy, falsity.
 */
typedef struct NvTriple {
  double mu;
  double omega;
  double nu;
} NvTriple;

/**
 * Five-component partition over true, contradictory, hesitant, unknown,
 * false.
 */
typedef struct NvPenta {
  double t;
  double c;
  double h;
  double u;
  double f;
} NvPenta;

/**
 * Six-component partition: the penta components plus ambiguity.
 */
typedef struct NvHexa {
  double t;
  double c;
  double h;
  double u;
  double f;
  double a;
} NvHexa;

/**
 * Bipolar decomposition of a truth/falsity pair.
 */
typedef struct NvBipolar {
  double tau_plus;
  double tau_minus;
  double alpha;
  double pi;
  double kappa;
} NvBipolar;

/**
 * Ten-term inspection decomposition (upper-square terms first).
 */
typedef struct NvTenTerm {
  double weak_true;
  double weak_false;
  double neutral;
  double saturated;
  double hesitant_part;
  double true_part;
  double false_part;
  double unknown_part;
  double contradictory_part;
  double ambiguous_part;
} NvTenTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a tolerance policy handle. Returns NULL when any tolerance is
 * not a strictly positive finite number. Release with
 * [`nv_tolerance_free`].
 */
struct NvTolerance *nv_tolerance_new(double eps_partition, double eps_zero, double eps_roundtrip);

/**
 * Creates a handle carrying the default tolerance policy.
 */
struct NvTolerance *nv_tolerance_default(void);

/**
 * Releases a handle returned by [`nv_tolerance_new`] or
 * [`nv_tolerance_default`]. NULL is ignored.
 *
 * # Safety
 * `tol` must be a pointer previously returned by this library and not yet
 * freed.
 */
void nv_tolerance_free(struct NvTolerance *tol);

/**
 * Validates raw components into a triple, clamping values within the zero
 * tolerance of the unit interval.
 *
 * # Safety
 * `out` must point to writable memory for one `NvTriple`; `tol` must be
 * NULL or a live tolerance handle.
 */
NvStatus nv_validate_triple(double mu,
                            double omega,
                            double nu,
                            const struct NvTolerance *tol,
                            struct NvTriple *out);

/**
 * Validates raw components as a penta partition of unity.
 *
 * # Safety
 * As [`nv_validate_triple`], with `out` sized for one `NvPenta`.
 */
NvStatus nv_validate_penta(double t,
                           double c,
                           double h,
                           double u,
                           double f,
                           const struct NvTolerance *tol,
                           struct NvPenta *out);

/**
 * Validates raw components as a hexa partition of unity.
 *
 * # Safety
 * As [`nv_validate_triple`], with `out` sized for one `NvHexa`.
 */
NvStatus nv_validate_hexa(double t,
                          double c,
                          double h,
                          double u,
                          double f,
                          double a,
                          const struct NvTolerance *tol,
                          struct NvHexa *out);

/**
 * Bipolar decomposition of `(mu, nu)` into net truth, net falsity,
 * ambiguity, ignorance, and contradiction.
 *
 * # Safety
 * `out` must point to writable memory for one `NvBipolar`.
 */
NvStatus nv_bipolar_decompose(double mu, double nu, struct NvBipolar *out);

/**
 * The four Belnap-aligned terms `(mu - kappa, nu - kappa, pi, kappa)`.
 *
 * # Safety
 * `out` must point to writable memory for four doubles.
 */
NvStatus nv_bipolar_tetra(double mu, double nu, double *out);

/**
 * Forward penta transform. `variant` is 1 or 2.
 *
 * # Safety
 * `x` must point to a readable `NvTriple` and `out` to a writable
 * `NvPenta`; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_to_penta(const struct NvTriple *x,
                     int32_t variant,
                     const struct NvTolerance *tol,
                     struct NvPenta *out);

/**
 * Inverse penta transform back to the primary triple.
 *
 * # Safety
 * `p` must point to a readable `NvPenta` and `out` to a writable
 * `NvTriple`; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_from_penta(const struct NvPenta *p,
                       int32_t variant,
                       const struct NvTolerance *tol,
                       struct NvTriple *out);

/**
 * Forward hexa transform. `variant` is 1 or 2.
 *
 * # Safety
 * `x` must point to a readable `NvTriple` and `out` to a writable
 * `NvHexa`; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_to_hexa(const struct NvTriple *x,
                    int32_t variant,
                    const struct NvTolerance *tol,
                    struct NvHexa *out);

/**
 * Folds the ambiguity of a hexa vector back into a penta vector.
 *
 * # Safety
 * `x` must point to a readable `NvHexa` and `out` to a writable
 * `NvPenta`; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_hexa_fold_penta(const struct NvHexa *x,
                            int32_t variant,
                            const struct NvTolerance *tol,
                            struct NvPenta *out);

/**
 * Ten-term inspection decomposition of a triple.
 *
 * # Safety
 * `x` must point to a readable `NvTriple` and `out` to a writable
 * `NvTenTerm`; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_ten_term(const struct NvTriple *x,
                     const struct NvTolerance *tol,
                     struct NvTenTerm *out);

/**
 * Vector union. Operands must satisfy `c * u = 0` and the
 * `t + c + u + f <= 1` bound.
 *
 * # Safety
 * `a` and `b` must point to readable `NvPenta` values and `out` to a
 * writable one; `tol` must be NULL or a live tolerance handle.
 */
NvStatus nv_penta_union(const struct NvPenta *a,
                        const struct NvPenta *b,
                        const struct NvTolerance *tol,
                        struct NvPenta *out);

/**
 * Vector intersection; see [`nv_penta_union`] for preconditions.
 *
 * # Safety
 * As [`nv_penta_union`].
 */
NvStatus nv_penta_intersection(const struct NvPenta *a,
                               const struct NvPenta *b,
                               const struct NvTolerance *tol,
                               struct NvPenta *out);

/**
 * Vector equivalence, composed as `(not a or b) and (a or not b)`.
 *
 * # Safety
 * As [`nv_penta_union`].
 */
NvStatus nv_penta_equivalence(const struct NvPenta *a,
                              const struct NvPenta *b,
                              const struct NvTolerance *tol,
                              struct NvPenta *out);

/**
 * Vector S-implication, composed as `not a or b`.
 *
 * # Safety
 * As [`nv_penta_union`].
 */
NvStatus nv_penta_implication(const struct NvPenta *a,
                              const struct NvPenta *b,
                              const struct NvTolerance *tol,
                              struct NvPenta *out);

/**
 * Vector complement: swaps t and f.
 *
 * # Safety
 * `x` must point to a readable `NvPenta` and `out` to a writable one.
 */
NvStatus nv_penta_complement(const struct NvPenta *x,
                             const struct NvTolerance *tol,
                             struct NvPenta *out);

/**
 * Vector negation: swaps t with f and c with u.
 *
 * # Safety
 * As [`nv_penta_complement`].
 */
NvStatus nv_penta_negation(const struct NvPenta *x,
                           const struct NvTolerance *tol,
                           struct NvPenta *out);

/**
 * Vector dual: swaps c and u.
 *
 * # Safety
 * As [`nv_penta_complement`].
 */
NvStatus nv_penta_dual(const struct NvPenta *x, const struct NvTolerance *tol, struct NvPenta *out);

/**
 * Primary complement `(mu, omega, nu) -> (nu, omega, mu)`.
 *
 * # Safety
 * `x` must point to a readable `NvTriple` and `out` to a writable one.
 */
NvStatus nv_triple_complement(const struct NvTriple *x,
                              const struct NvTolerance *tol,
                              struct NvTriple *out);

/**
 * Primary negation `(mu, omega, nu) -> (1 - mu, omega, 1 - nu)`.
 *
 * # Safety
 * As [`nv_triple_complement`].
 */
NvStatus nv_triple_negation(const struct NvTriple *x,
                            const struct NvTolerance *tol,
                            struct NvTriple *out);

/**
 * Primary dual `(mu, omega, nu) -> (1 - nu, omega, 1 - mu)`.
 *
 * # Safety
 * As [`nv_triple_complement`].
 */
NvStatus nv_triple_dual(const struct NvTriple *x,
                        const struct NvTolerance *tol,
                        struct NvTriple *out);

/**
 * Symbolic union over [`NvLogicValue`] codes.
 *
 * # Safety
 * `out` must point to writable memory for one `NvLogicValue`.
 */
NvStatus nv_logic_union(int32_t x, int32_t y, NvLogicValue *out);

/**
 * Symbolic intersection over [`NvLogicValue`] codes.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_intersection(int32_t x, int32_t y, NvLogicValue *out);

/**
 * Symbolic equivalence over [`NvLogicValue`] codes.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_equivalence(int32_t x, int32_t y, NvLogicValue *out);

/**
 * Symbolic S-implication over [`NvLogicValue`] codes.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_implication(int32_t x, int32_t y, NvLogicValue *out);

/**
 * Symbolic complement.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_complement(int32_t x, NvLogicValue *out);

/**
 * Symbolic negation.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_negation(int32_t x, NvLogicValue *out);

/**
 * Symbolic dual.
 *
 * # Safety
 * As [`nv_logic_union`].
 */
NvStatus nv_logic_dual(int32_t x, NvLogicValue *out);

/**
 * Static name of a status code, for diagnostics. Never freed by the
 * caller.
 */
const char *nv_status_name(NvStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NEUTROVAL_H */
