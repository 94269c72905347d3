#ifndef TAUTRING_H
#define TAUTRING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Values match the command-line exit codes where they
 * overlap.
 */
typedef enum TrStatus {
  TR_STATUS_OK = 0,
  TR_STATUS_VERIFICATION_FAILED = 1,
  TR_STATUS_INVALID_INPUT = 2,
  TR_STATUS_INCONSISTENT = 3,
  TR_STATUS_NULL_POINTER = 4,
  TR_STATUS_PANIC = 5,
} TrStatus;

/**
 * Which product `tr_product_json` computes.
 */
typedef enum TrProduct {
  TR_PRODUCT_STAR = 0,
  TR_PRODUCT_DOT = 1,
} TrProduct;

/**
 * Opaque resolved model.
 */
typedef struct TrModel TrModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Resolves the listed case `label` of genus `genus`.
 *
 * # Safety
 * `label` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TrStatus tr_model_build(uint32_t genus, const char *label, struct TrModel **out);

/**
 * Parses a model from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TrStatus tr_model_from_json(const char *json, struct TrModel **out);

/**
 * Releases a model. Null is ignored.
 *
 * # Safety
 * `model` must come from this library and not be freed twice.
 */
void tr_model_free(struct TrModel *model);

/**
 * # Safety
 * `model` and `out` must be valid pointers.
 */
enum TrStatus tr_model_genus(const struct TrModel *model, uint32_t *out);

/**
 * # Safety
 * `model` and `out` must be valid pointers.
 */
enum TrStatus tr_model_dimension(const struct TrModel *model, uint64_t *out);

/**
 * Canonical JSON form of a model.
 *
 * # Safety
 * `model` and `out` must be valid pointers.
 */
enum TrStatus tr_model_to_json(const struct TrModel *model, char **out);

/**
 * Fourier transform of a cycle given in JSON form.
 *
 * # Safety
 * `model`, `cycle_json` and `out` must be valid pointers.
 */
enum TrStatus tr_fourier_json(const struct TrModel *model, const char *cycle_json, char **out);

/**
 * Pontryagin or intersection product of two cycles in JSON form.
 *
 * # Safety
 * `model`, `x_json`, `y_json` and `out` must be valid pointers.
 */
enum TrStatus tr_product_json(const struct TrModel *model,
                              enum TrProduct product,
                              const char *x_json,
                              const char *y_json,
                              char **out);

/**
 * `ξ_{i,j}^[t]` as a `"p/q"` string.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TrStatus tr_xi_pair(uint32_t genus, uint32_t i, uint32_t j, uint32_t t, char **out);

/**
 * The case list of one genus, with dimensions, as JSON.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TrStatus tr_enumerate_json(uint32_t genus, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void tr_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call on the same thread.
 */
const char *tr_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAUTRING_H */
