#ifndef COSET_SPECTRA_H
#define COSET_SPECTRA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_UTF8 = 2,
  CS_STATUS_PARSE = 3,
  CS_STATUS_UNSUPPORTED = 4,
  CS_STATUS_INVALID_WEIGHT = 5,
  CS_STATUS_INVALID_SUBSYSTEM = 6,
  CS_STATUS_LIMIT_EXCEEDED = 7,
  CS_STATUS_ARITHMETIC = 8,
  CS_STATUS_VERIFICATION_FAILED = 9,
  CS_STATUS_PANIC = 10,
} CsStatus;

/**
 * Opaque handle to a parsed space specification.
 */
typedef struct CsSpace CsSpace;

/**
 * An exact rational `num/den` with `den > 0`.
 */
typedef struct CsRational {
  int64_t num;
  int64_t den;
} CsRational;

/**
 * Both lowest-level records for the space's `μ`.
 */
typedef struct CsLowest {
  /**
   * False when `μ+ρ_η` is singular and the kostant fields are zero.
   */
  bool kostant_attained;
  struct CsRational kostant_energy;
  uint64_t kostant_multiplicity;
  struct CsRational frobenius_energy;
  uint64_t frobenius_degeneracy;
  uint64_t frobenius_multiplicity;
} CsLowest;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `spec` and builds the pair. On success `*out` owns a new handle.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CsStatus cs_space_new(const char *spec, struct CsSpace **out);

/**
 * Releases a handle from [`cs_space_new`]. Null is ignored.
 *
 * # Safety
 * `space` must come from [`cs_space_new`] and not be used afterwards.
 */
void cs_space_free(struct CsSpace *space);

/**
 * `|W_g|`, `|W_η|` and the transversal size `|C|`.
 *
 * # Safety
 * `space` must be a live handle; the out-pointers must be valid.
 */
enum CsStatus cs_space_weyl_orders(const struct CsSpace *space,
                                   uint64_t *order_g,
                                   uint64_t *order_eta,
                                   uint64_t *transversal);

/**
 * Both lowest-level records for the space's `μ`, energies multiplied by
 * the spec's `scale`.
 *
 * # Safety
 * `space` must be a live handle and `out` a valid pointer.
 */
enum CsStatus cs_space_lowest(const struct CsSpace *space, struct CsLowest *out);

/**
 * Runs a CLI command (`spectrum`, `lowest`, `gkrs-check`, `weyl-info`) and
 * returns its JSON report in `*out_json`. A `gkrs-check` with an
 * unverified weight still fills `*out_json` but returns
 * `CS_STATUS_VERIFICATION_FAILED`.
 *
 * # Safety
 * `command` and `spec` must be NUL-terminated; `out_json` a valid pointer.
 */
enum CsStatus cs_run_json(const char *command,
                          const char *spec,
                          size_t lines,
                          uint64_t dim_bound,
                          char **out_json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cs_string_free(char *s);

/**
 * Message of the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *cs_last_error_message(void);

/**
 * Library version, statically allocated.
 */
const char *cs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COSET_SPECTRA_H */
