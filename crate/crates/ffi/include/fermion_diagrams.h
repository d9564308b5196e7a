#ifndef FERMION_DIAGRAMS_H
#define FERMION_DIAGRAMS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FdStatus {
  FD_STATUS_OK = 0,
  FD_STATUS_NULL_POINTER = 1,
  FD_STATUS_INVALID_UTF8 = 2,
  FD_STATUS_PARSE_ERROR = 3,
  FD_STATUS_BOUNDARY_ERROR = 4,
  FD_STATUS_DOMAIN_ERROR = 5,
  FD_STATUS_VERIFICATION_FAILED = 6,
  FD_STATUS_PANIC = 7,
} FdStatus;

typedef enum FdSuite {
  FD_SUITE_ISO = 0,
  FD_SUITE_ADJUNCTION = 1,
  FD_SUITE_ZIGZAG = 2,
  FD_SUITE_SOUNDNESS = 3,
  FD_SUITE_SWEEP = 4,
  FD_SUITE_DIMENSION = 5,
  FD_SUITE_FUNCTORIALITY = 6,
} FdSuite;

/**
 * A normalized 2-morphism.
 */
typedef struct FdMorphism FdMorphism;

/**
 * A representation context for a fixed matrix size.
 */
typedef struct FdRepContext FdRepContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Normalizes a diagram expression. `source` is 0 or 1 for the labeled
 * 2-category, or -1 for the unlabeled category.
 *
 * # Safety
 * `diagram` must be a valid NUL-terminated string and `out` valid for writes.
 */
enum FdStatus fd_normalize(const char *diagram, int32_t source, struct FdMorphism **out);

/**
 * Writes the morphism as JSON; release with `fd_string_free`.
 *
 * # Safety
 * `m` must come from `fd_normalize` and `out` must be valid for writes.
 */
enum FdStatus fd_morphism_to_json(const struct FdMorphism *m, char **out);

/**
 * Writes the ASCII rendering; release with `fd_string_free`.
 *
 * # Safety
 * `m` must come from `fd_normalize` and `out` must be valid for writes.
 */
enum FdStatus fd_morphism_render(const struct FdMorphism *m, char **out);

/**
 * # Safety
 * `m` must come from `fd_normalize` and `out` must be valid for writes.
 */
enum FdStatus fd_morphism_is_zero(const struct FdMorphism *m, bool *out);

/**
 * # Safety
 * `m` must be null or come from `fd_normalize`, and not be used afterwards.
 */
void fd_morphism_free(struct FdMorphism *m);

/**
 * Dimension of the 2-morphisms from `bottom` to `top` read from `source`.
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings and `out` valid for writes.
 */
enum FdStatus fd_hom_dim(const char *bottom, const char *top, int32_t source, size_t *out);

/**
 * Fock inner product `<A_left n | A_right n>` for the reference state `|n>`.
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings and `out` valid for writes.
 */
enum FdStatus fd_inner_product(const char *left,
                               const char *right,
                               int32_t reference,
                               uint64_t *out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FdStatus fd_rep_context_new(size_t n, struct FdRepContext **out);

/**
 * # Safety
 * `ctx` must be null or come from `fd_rep_context_new`, and not be used afterwards.
 */
void fd_rep_context_free(struct FdRepContext *ctx);

/**
 * Runs a verification suite and writes its JSON report (when `report_json`
 * is non-null). Returns `FD_STATUS_VERIFICATION_FAILED` if any check fails.
 *
 * # Safety
 * `ctx` must come from `fd_rep_context_new`; `report_json` must be null or valid for writes.
 */
enum FdStatus fd_verify(const struct FdRepContext *ctx,
                        enum FdSuite suite,
                        size_t max_len,
                        size_t samples,
                        uint64_t seed,
                        char **report_json);

/**
 * # Safety
 * `s` must be null or a string returned by this library, and not be used afterwards.
 */
void fd_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *fd_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FERMION_DIAGRAMS_H */
