#ifndef MARTENSITE_H
#define MARTENSITE_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum MartensiteStatus {
  MARTENSITE_STATUS_OK = 0,
  MARTENSITE_STATUS_NULL_ARGUMENT = 1,
  MARTENSITE_STATUS_INVALID_PARAMS = 2,
  MARTENSITE_STATUS_UNKNOWN_MATERIAL = 3,
  MARTENSITE_STATUS_DEGENERATE_PARAMS = 4,
  MARTENSITE_STATUS_FLAT_POLYTOPE = 5,
  MARTENSITE_STATUS_COMPUTATION_FAILED = 6,
  MARTENSITE_STATUS_BUFFER_TOO_SMALL = 7,
  MARTENSITE_STATUS_INVALID_UTF8 = 8,
} MartensiteStatus;

// Opaque variant-set handle.
typedef struct MartensiteVariants MartensiteVariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message describing the most recent failure on this thread.
//
// # Safety
// `buffer` must point to `capacity` writable bytes (or be null to query the
// required length via `written`).
enum MartensiteStatus martensite_last_error(char *buffer, uintptr_t capacity, uintptr_t *written);

// Builds a handle from a material in the shipped registry.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be a valid pointer.
enum MartensiteStatus martensite_variants_from_material(const char *name,
                                                        struct MartensiteVariants **out);

// Builds a handle from four exact parameter strings (decimals or `a/b`).
//
// # Safety
// All four strings must be NUL-terminated; `out` must be valid.
enum MartensiteStatus martensite_variants_from_params(const char *alpha,
                                                      const char *beta,
                                                      const char *delta,
                                                      const char *epsilon,
                                                      struct MartensiteVariants **out);

// Releases a handle. Null is allowed.
//
// # Safety
// `handle` must have come from one of the constructors and not been freed.
void martensite_variants_free(struct MartensiteVariants *handle);

// Regime code: 0 = Ia (eps < delta), 1 = boundary, 2 = Ib; -1 on null.
//
// # Safety
// `handle` must be a live handle or null.
int martensite_regime(const struct MartensiteVariants *handle);

// 1 when the parameters are generic (neither degenerate nor flat), else 0.
//
// # Safety
// `handle` must be a live handle or null.
int martensite_is_generic(const struct MartensiteVariants *handle);

// Sign of `det(e_j - e_i)` for 1-based variant indices: -1, 0 or +1.
//
// # Safety
// `handle` and `sign` must be valid pointers.
enum MartensiteStatus martensite_pair_det_sign(const struct MartensiteVariants *handle,
                                               int i,
                                               int j,
                                               int *sign);

// Number of facets of the variant polytope (25, 7 or 33 by regime).
//
// # Safety
// `handle` and `count` must be valid pointers.
enum MartensiteStatus martensite_facet_count(const struct MartensiteVariants *handle,
                                             uintptr_t *count);

// Facet list as a JSON document (vertex indices, exact normals, offsets,
// orbit-group labels).
//
// # Safety
// `handle` must be live; `buffer` must point to `capacity` writable bytes
// (or be null to query the required length via `written`).
enum MartensiteStatus martensite_facets_json(const struct MartensiteVariants *handle,
                                             char *buffer,
                                             uintptr_t capacity,
                                             uintptr_t *written);

// Decimal rendering (truncated at `digits` places) of the scaffold
// parameter of the T3 on variants `(i, j, k)`.
//
// # Safety
// `handle` must be live; `buffer` must point to `capacity` writable bytes
// (or be null to query the required length via `written`).
enum MartensiteStatus martensite_t3_lambda_decimal(const struct MartensiteVariants *handle,
                                                   int i,
                                                   int j,
                                                   int k,
                                                   uintptr_t digits,
                                                   char *buffer,
                                                   uintptr_t capacity,
                                                   uintptr_t *written);

// Runs the full verification ledger; `failed` receives the number of
// failing claims (0 for a clean run).
//
// # Safety
// `handle` and `failed` must be valid pointers.
enum MartensiteStatus martensite_verify(const struct MartensiteVariants *handle, uintptr_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MARTENSITE_H */
