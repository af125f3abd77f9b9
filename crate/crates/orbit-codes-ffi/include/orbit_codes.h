#ifndef ORBIT_CODES_H
#define ORBIT_CODES_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored into the generated header.
 */
typedef enum OcStatus {
  OcStatus_Ok = 0,
  OcStatus_NullPointer = 1,
  OcStatus_NotPrime = 2,
  OcStatus_SizeCapExceeded = 3,
  OcStatus_BadParams = 4,
  OcStatus_DivisionByZero = 5,
  OcStatus_FieldMismatch = 6,
  OcStatus_DimensionMismatch = 7,
  OcStatus_BufferTooSmall = 8,
  OcStatus_TooLarge = 9,
} OcStatus;

/**
 * Opaque field handle.
 */
typedef struct OcField OcField;

/**
 * Opaque subspace handle.
 */
typedef struct OcSubspace OcSubspace;

/**
 * Weight distribution result; counts are written into a caller buffer.
 */
typedef struct OcWeights {
  /**
   * Dimension k; counts[0..=k] are valid.
   */
  uint32_t k;
  uint32_t stab_degree;
  uint64_t orbit_size;
  /**
   * r of the r-FWS verdict, or -1 when the pattern fails.
   */
  int32_t rfws_r;
} OcWeights;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build F_(p^(e*n)); on success writes a handle the caller must free with
 * `oc_field_free`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum OcStatus oc_field_build(uint64_t p, uint32_t e, uint32_t n, struct OcField **out);

/**
 * # Safety
 * `field` must be null or a pointer returned by `oc_field_build`.
 */
void oc_field_free(struct OcField *field);

/**
 * Number of elements of the field, or 0 on null.
 *
 * # Safety
 * `field` must be null or a valid handle.
 */
uint64_t oc_field_size(const struct OcField *field);

/**
 * # Safety
 * `subspace` must be null or a pointer returned by a constructor here.
 */
void oc_subspace_free(struct OcSubspace *subspace);

/**
 * Dimension over F_q, or 0 on null.
 *
 * # Safety
 * `subspace` must be null or a valid handle.
 */
uint32_t oc_subspace_dim(const struct OcSubspace *subspace);

/**
 * b<1, λ, ..., λ^(k-1)>_{F_q}; b is given by its exponent, b_exp < 0 means
 * b = 1.
 *
 * # Safety
 * `field` and `out` must be valid pointers.
 */
enum OcStatus oc_polynomial_basis_code(const struct OcField *field,
                                       uint32_t t,
                                       uint32_t k,
                                       int64_t b_exp,
                                       struct OcSubspace **out);

/**
 * <1, λ, ..., λ^(l-1)>_{F_{q^2}} ⊕ λ^l F_q.
 *
 * # Safety
 * `field` and `out` must be valid pointers.
 */
enum OcStatus oc_mixed_q2_code(const struct OcField *field,
                               uint32_t t,
                               uint32_t l,
                               struct OcSubspace **out);

/**
 * S̄ ⊕ b<1, λ, ..., λ^(m-1)>_{F_q} with n = t(l+1); b_exp < 0 means b = 1.
 *
 * # Safety
 * `field` and `out` must be valid pointers.
 */
enum OcStatus oc_rfws_mixed_code(const struct OcField *field,
                                 uint32_t t,
                                 uint32_t l,
                                 uint32_t m,
                                 int64_t b_exp,
                                 struct OcSubspace **out);

/**
 * Subspace distance dim U + dim V - 2 dim(U ∩ V).
 *
 * # Safety
 * All pointers must be valid.
 */
enum OcStatus oc_subspace_distance(const struct OcSubspace *u,
                                   const struct OcSubspace *v,
                                   uint32_t *out);

/**
 * Exhaustive weight distribution of Orb(S). `counts` must hold at least
 * dim(S)+1 entries; `counts_len` is the capacity on input.
 *
 * # Safety
 * `subspace`, `counts` (with the stated capacity) and `meta` must be valid.
 */
enum OcStatus oc_weight_distribution(const struct OcSubspace *subspace,
                                     uint64_t *counts,
                                     size_t counts_len,
                                     struct OcWeights *meta);

/**
 * Closed-form distribution of the polynomial-basis family.
 *
 * # Safety
 * `counts` (with the stated capacity) and `k_out` must be valid.
 */
enum OcStatus oc_family1_wd_formula(uint64_t q,
                                    uint32_t n,
                                    uint32_t t,
                                    uint32_t k,
                                    uint64_t *counts,
                                    size_t counts_len,
                                    uint32_t *k_out);

/**
 * Closed-form distribution of the mixed family.
 *
 * # Safety
 * `counts` (with the stated capacity) and `k_out` must be valid.
 */
enum OcStatus oc_family2_wd_formula(uint64_t q,
                                    uint32_t n,
                                    uint32_t l,
                                    uint64_t *counts,
                                    size_t counts_len,
                                    uint32_t *k_out);

/**
 * Closed-form distribution of the r-FWS family.
 *
 * # Safety
 * `counts` (with the stated capacity) and `k_out` must be valid.
 */
enum OcStatus oc_rfws_wd_formula(uint64_t q,
                                 uint32_t n,
                                 uint32_t t,
                                 uint32_t l,
                                 uint32_t m,
                                 uint64_t *counts,
                                 size_t counts_len,
                                 uint32_t *k_out);

/**
 * Frobenius-equivalence test between two subspaces of the same field.
 * Writes 1/0 to `equivalent`; when equivalent, `frob_out` and `alpha_exp`
 * receive a witness x ↦ α x^(q^i) with ψ(S1) = S2.
 *
 * # Safety
 * All pointers must be valid.
 */
enum OcStatus oc_frobenius_equivalent(const struct OcSubspace *s1,
                                      const struct OcSubspace *s2,
                                      int32_t *equivalent,
                                      uint32_t *frob_out,
                                      uint64_t *alpha_exp);

/**
 * The scalar translate gamma^j * S as a new handle.
 *
 * # Safety
 * `subspace` and `out` must be valid pointers.
 */
enum OcStatus oc_scalar_translate(const struct OcSubspace *subspace,
                                  uint64_t gamma_exp,
                                  struct OcSubspace **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBIT_CODES_H */
