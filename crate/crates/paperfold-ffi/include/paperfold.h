#ifndef PAPERFOLD_H
#define PAPERFOLD_H

#include <stdint.h>
#include <stdbool.h>
#include <stddef.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum PfStatus {
  PF_STATUS_OK = 0,
  /**
   * An index or level outside the domain (e.g. index 0).
   */
  PF_STATUS_DOMAIN_ERROR = 1,
  PF_STATUS_NULL_POINTER = 2,
  /**
   * Output buffer smaller than the requested length.
   */
  PF_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * The oracle's completeness certificate was not reached within the cap.
   */
  PF_STATUS_CERTIFICATION_FAILED = 4,
  PF_STATUS_INTERNAL_ERROR = 5,
} PfStatus;

/**
 * Opaque handle to a verified linear representation.
 */
typedef struct PfLinRep PfLinRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The letter `f_n` of the word (1-based), written to `out` as 0 or 1.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `uint8_t`.
 */
enum PfStatus pf_letter_at(uint64_t n, uint8_t *out);

/**
 * Writes `f_1 .. f_length` into `out`, one letter per byte (values 0/1),
 * by the odd-part formula.
 *
 * # Safety
 * `out` must point to at least `out_len` writable bytes.
 */
enum PfStatus pf_prefix(uint64_t length, uint8_t *out, uintptr_t out_len);

/**
 * Same as [`pf_prefix`] but generated by the Toeplitz construction.
 *
 * # Safety
 * `out` must point to at least `out_len` writable bytes.
 */
enum PfStatus pf_toeplitz_prefix(uint64_t length, uint8_t *out, uintptr_t out_len);

/**
 * The abelian complexity `rho(n)` by the recurrence route.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `uint64_t`.
 */
enum PfStatus pf_rho_rec(uint64_t n, uint64_t *out);

/**
 * Ground-truth `rho(n)` from the windowing oracle. `prefix_cap` bounds
 * the certification loop (0 selects the default of 2^28 letters). On
 * certification failure the uncertified value is still written and
 * `PF_STATUS_CERTIFICATION_FAILED` returned.
 *
 * # Safety
 * `out_rho` and `out_certified` must be null or valid pointers.
 */
enum PfStatus pf_rho_oracle(uint64_t n,
                            uint64_t prefix_cap,
                            uint64_t *out_rho,
                            bool *out_certified);

/**
 * Builds (and row-verifies) the linear representation, returning an
 * opaque handle through `out`.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `PfLinRep*`.
 */
enum PfStatus pf_linrep_new(struct PfLinRep **out);

/**
 * Releases a handle from [`pf_linrep_new`]. Null is a no-op.
 *
 * # Safety
 * `handle` must be null or a pointer returned by `pf_linrep_new` that has
 * not been freed yet.
 */
void pf_linrep_free(struct PfLinRep *handle);

/**
 * `rho(n)` evaluated through the matrices of `handle`.
 *
 * # Safety
 * `handle` must be a live pointer from `pf_linrep_new`; `out` must be
 * null or a valid pointer to a `uint64_t`.
 */
enum PfStatus pf_linrep_eval(const struct PfLinRep *handle, uint64_t n, uint64_t *out);

/**
 * The representation as its JSON document, as a newly allocated
 * NUL-terminated string. Free with [`pf_string_free`]. Returns null on a
 * null handle.
 *
 * # Safety
 * `handle` must be null or a live pointer from `pf_linrep_new`.
 */
char *pf_linrep_to_json(const struct PfLinRep *handle);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by
 * [`pf_linrep_to_json`], not yet freed.
 */
void pf_string_free(char *s);

/**
 * The closed form `B(i)` for the first index where `rho` reaches `i + 1`.
 *
 * # Safety
 * `out` must be null or a valid pointer to a `uint64_t`.
 */
enum PfStatus pf_growth_b_closed(uint32_t i, uint64_t *out);

/**
 * Scans for the first index with `rho = i + 1` and compares it to the
 * closed form. `out_a` receives 0 when the scan found no index up to
 * `B(i) + 1`.
 *
 * # Safety
 * `out_a` and `out_match` must be null or valid pointers.
 */
enum PfStatus pf_growth_a_of_i(uint32_t i, uint64_t *out_a, bool *out_match);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAPERFOLD_H */
