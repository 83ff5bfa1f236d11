#ifndef STRINGHODGE_H
#define STRINGHODGE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values below 5 match the CLI exit codes.
 */
typedef enum SxStatus {
  SX_STATUS_OK = 0,
  SX_STATUS_INVALID_INPUT = 2,
  SX_STATUS_LIMIT_EXCEEDED = 3,
  SX_STATUS_IDENTITY_VIOLATION = 4,
  SX_STATUS_NULL_POINTER = 5,
  SX_STATUS_PANIC = 6,
} SxStatus;

/**
 * Opaque finite group with its conjugacy classes.
 */
typedef struct SxGroup SxGroup;

/**
 * Opaque lattice polytope.
 */
typedef struct SxPolytope SxPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *sx_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed at most once.
 */
void sx_string_free(char *s);

/**
 * Parses `{"ambient_dim": d, "vertices": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SxStatus sx_polytope_from_json(const char *json, struct SxPolytope **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, freed at most once.
 */
void sx_polytope_free(struct SxPolytope *p);

/**
 * Dimension of the polytope, or `-1` for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
int64_t sx_polytope_dim(const struct SxPolytope *p);

/**
 * # Safety
 * `p` must be null or a live handle.
 */
bool sx_polytope_is_reflexive(const struct SxPolytope *p);

/**
 * # Safety
 * `p` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_polytope_dual(const struct SxPolytope *p, struct SxPolytope **out);

/**
 * `{"s": [...], "s_tilde": [...] | null}`.
 *
 * # Safety
 * `p` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_polytope_s_polynomial(const struct SxPolytope *p, char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_stringy_fano(const struct SxPolytope *p, char **out);

/**
 * Hypersurface invariants; `u1` selects the `u = 1` specialization.
 *
 * # Safety
 * `p` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_stringy_hypersurface(const struct SxPolytope *p, bool u1, char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_stringy_mirror(const struct SxPolytope *p, char **out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum SxStatus sx_stringy_dwork(uint32_t d, char **out);

/**
 * Parses `{"degree": d, "generators": [...]}` and closes the group, failing
 * with `LimitExceeded` past `cap` elements.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SxStatus sx_group_from_json(const char *json, size_t cap, struct SxGroup **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed at most once.
 */
void sx_group_free(struct SxGroup *g);

/**
 * Group order, or `0` for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sx_group_order(const struct SxGroup *g);

/**
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sx_group_num_classes(const struct SxGroup *g);

/**
 * `{"s": [...], "s_tilde": [...]}`.
 *
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum SxStatus sx_group_s_polynomials(const struct SxGroup *g, char **out);

/**
 * Orbifold Hodge numbers from a sector file given as a JSON string.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SxStatus sx_orbifold_hodge(const char *json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRINGHODGE_H */
