#ifndef ENTWIT_H
#define ENTWIT_H

/* Generated by cbindgen from entwit-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum EwStatus {
  EwStatus_Ok = 0,
  EwStatus_NullPointer = 1,
  EwStatus_InvalidArgument = 2,
  EwStatus_DimensionMismatch = 3,
  EwStatus_Truncation = 4,
  EwStatus_Numerical = 5,
  EwStatus_Panic = 6,
} EwStatus;

/**
 * Operator selectors for witness evaluations. `Quadrature` uses the extra
 * angle parameter; all others ignore it.
 */
typedef enum EwOperator {
  EwOperator_SigmaMinus = 0,
  EwOperator_SigmaPlus = 1,
  EwOperator_Annihilation = 2,
  EwOperator_Creation = 3,
  EwOperator_Number = 4,
  EwOperator_Position = 5,
  EwOperator_Momentum = 6,
  EwOperator_Quadrature = 7,
} EwOperator;

/**
 * Opaque handle to a bipartite quantum state.
 */
typedef struct EwState EwState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ew_last_error_message(void);

/**
 * Frees a state handle; null is accepted and ignored.
 *
 * # Safety
 * `state` must be null or an unfreed handle from an `ew_state_*` constructor.
 */
void ew_state_free(struct EwState *state);

/**
 * Subsystem dimensions of a state.
 *
 * # Safety
 * `state` must be a live handle; `dim_a` and `dim_b` must be valid for writes.
 */
enum EwStatus ew_state_dims(const struct EwState *state, uintptr_t *dim_a, uintptr_t *dim_b);

/**
 * Bell state `which` (1: shared excitation, 2: pair creation).
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum EwStatus ew_state_bell(uint32_t which, struct EwState **out);

/**
 * Werner mixture of the selected Bell state with the maximally mixed state.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum EwStatus ew_state_werner(uint32_t which, double p, struct EwState **out);

/**
 * Two-mode squeezed vacuum at squeezing `r`. A negative `cutoff` selects
 * the smallest cutoff meeting `tail_tol`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum EwStatus ew_state_tmsv(double r, int64_t cutoff, double tail_tol, struct EwState **out);

/**
 * Squeezed-thermal mixture with mixing probability `p` and squeezing `r`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum EwStatus ew_state_squeezed_thermal(double p,
                                        double r,
                                        int64_t cutoff,
                                        double tail_tol,
                                        struct EwState **out);

/**
 * Two coherent modes evolved under the cross-Kerr coupling for time `t`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum EwStatus ew_state_cross_kerr(double alpha,
                                  double beta,
                                  double t,
                                  int64_t cutoff,
                                  double tail_tol,
                                  struct EwState **out);

/**
 * Pairwise-product witness `<n_A><n_B> - Tr(n_A n_B rho^2)`; negative
 * certifies entanglement.
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write.
 */
enum EwStatus ew_witness_product(const struct EwState *state,
                                 enum EwOperator op_a,
                                 double theta_a,
                                 enum EwOperator op_b,
                                 double theta_b,
                                 double *value);

/**
 * Phase-form witness at the optimal phase; negative certifies
 * entanglement.
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write; `phi_used` may be null.
 */
enum EwStatus ew_witness_phase_optimal(const struct EwState *state,
                                       enum EwOperator op_a,
                                       double theta_a,
                                       enum EwOperator op_b,
                                       double theta_b,
                                       double *value,
                                       double *phi_used);

/**
 * Both Hillery-Zubairy margins (`LHS - RHS`; positive flags entanglement).
 *
 * # Safety
 * `state` must be a live handle; `form1` and `form2` must be valid for writes.
 */
enum EwStatus ew_hz_margins(const struct EwState *state,
                            enum EwOperator op_a,
                            double theta_a,
                            enum EwOperator op_b,
                            double theta_b,
                            double *form1,
                            double *form2);

/**
 * Product witness with the weighted correlation replaced by the mean-field
 * estimate (`kind` = 1) or the spectral estimate (`kind` = 0).
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write.
 */
enum EwStatus ew_estimated_witness(const struct EwState *state,
                                   enum EwOperator op_a,
                                   double theta_a,
                                   enum EwOperator op_b,
                                   double theta_b,
                                   uint32_t kind,
                                   double *value);

/**
 * DGCZ variance criterion margin for a cross-Kerr evolved state; negative
 * flags entanglement.
 *
 * # Safety
 * `state` must be a live handle; `margin` must be valid for a write.
 */
enum EwStatus ew_dgcz_margin(const struct EwState *state,
                             double alpha,
                             double beta,
                             double t,
                             double *margin);

/**
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write.
 */
enum EwStatus ew_purity(const struct EwState *state, double *value);

/**
 * Absolute sum of negative partial-transpose eigenvalues.
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write.
 */
enum EwStatus ew_negativity(const struct EwState *state, double *value);

/**
 * Entropy of entanglement in bits; fails on mixed states.
 *
 * # Safety
 * `state` must be a live handle; `value` must be valid for a write.
 */
enum EwStatus ew_entanglement_entropy(const struct EwState *state, double *value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENTWIT_H */
