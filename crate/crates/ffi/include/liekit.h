#ifndef LIEKIT_H
#define LIEKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes; values 0 to 6 match the command-line exit codes.
typedef enum LiekitStatus {
  LIEKIT_STATUS_OK = 0,
  LIEKIT_STATUS_CHECK_FAILED = 1,
  LIEKIT_STATUS_INVALID_INPUT = 2,
  LIEKIT_STATUS_BAD_CARTAN = 3,
  LIEKIT_STATUS_NOT_NILPOTENT = 4,
  LIEKIT_STATUS_NON_SPLIT = 5,
  LIEKIT_STATUS_NOT_SEMISIMPLE = 6,
  LIEKIT_STATUS_NULL_POINTER = 7,
  LIEKIT_STATUS_INTERNAL = 8,
} LiekitStatus;

// Opaque algebra handle.
typedef struct LiekitAlgebra LiekitAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *liekit_last_error(void);

// Parses algebra JSON. The axioms are not checked; see
// [`liekit_algebra_check`].
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum LiekitStatus liekit_algebra_from_json(const char *json, struct LiekitAlgebra **out);

// Chevalley algebra of a named Cartan type, e.g. `"E8"` with `rank` 0,
// or `"B"` with `rank` 3.
//
// # Safety
// `label` must be a NUL-terminated string and `out` a writable pointer.
enum LiekitStatus liekit_algebra_from_cartan(const char *label,
                                             size_t rank,
                                             struct LiekitAlgebra **out);

// Classical family by name (`"sl"`, `"sp"`, `"so-jd"`, ...), with the
// size convention of the command line.
//
// # Safety
// `family` must be a NUL-terminated string and `out` a writable pointer.
enum LiekitStatus liekit_algebra_from_family(const char *family,
                                             size_t n,
                                             struct LiekitAlgebra **out);

// Dimension, or 0 for a null handle.
//
// # Safety
// `alg` must be null or a live handle.
size_t liekit_algebra_dim(const struct LiekitAlgebra *alg);

// # Safety
// `alg` must be a live handle and `out` a writable pointer.
enum LiekitStatus liekit_algebra_to_json(const struct LiekitAlgebra *alg, char **out);

// Checks the Jacobi identity on every basis triple when `full` is
// nonzero, otherwise on `count` triples sampled with `seed`. Returns
// `CheckFailed` if any triple fails, and stores the number of failing
// triples in `failures` when it is not null.
//
// # Safety
// `alg` must be a live handle; `failures` null or writable.
enum LiekitStatus liekit_algebra_check(const struct LiekitAlgebra *alg,
                                       int32_t full,
                                       uint64_t seed,
                                       size_t count,
                                       size_t *failures);

// Simple components as JSON, e.g. `[{"rank":4,"type":"F"}]`. The Cartan
// subalgebra is spanned by the listed basis vectors; with `len` 0 the
// algebra's own Cartan indices are used.
//
// # Safety
// `alg` must be a live handle, `indices` readable for `len` entries, and
// `out` writable.
enum LiekitStatus liekit_algebra_classify(const struct LiekitAlgebra *alg,
                                          const size_t *indices,
                                          size_t len,
                                          char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void liekit_string_free(char *s);

// # Safety
// `alg` must be null or a handle returned by this library, not yet freed.
void liekit_algebra_free(struct LiekitAlgebra *alg);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEKIT_H */
