#ifndef WANAS_H
#define WANAS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WanasConnection {
  WANAS_CONNECTION_CANONICAL = 0,
  WANAS_CONNECTION_LEVI_CIVITA = 1,
} WanasConnection;

typedef enum WanasKind {
  WANAS_KIND_FIRST = 0,
  WANAS_KIND_SECOND = 1,
} WanasKind;

typedef enum WanasStatus {
  WANAS_STATUS_OK = 0,
  WANAS_STATUS_NULL_ARGUMENT = 1,
  WANAS_STATUS_INVALID_UTF8 = 2,
  WANAS_STATUS_UNKNOWN_GROUP = 3,
  WANAS_STATUS_INVALID_INPUT = 4,
  WANAS_STATUS_CATALOG = 5,
  WANAS_STATUS_COMPUTATION = 6,
  WANAS_STATUS_PANIC = 7,
} WanasStatus;

/**
 * One Lie algebra with its metric and constraints.
 */
typedef struct WanasAlgebra WanasAlgebra;

/**
 * A loaded, checksum-verified catalog.
 */
typedef struct WanasCatalog WanasCatalog;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *wanas_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call on the same thread.
 */
const char *wanas_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void wanas_string_free(char *s);

/**
 * Loads the catalog, honouring `WANAS_CATALOG` like the CLI.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum WanasStatus wanas_catalog_load(struct WanasCatalog **out);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum WanasStatus wanas_catalog_embedded(struct WanasCatalog **out);

/**
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WanasStatus wanas_catalog_from_path(const char *path, struct WanasCatalog **out);

/**
 * # Safety
 * `cat` must be NULL or a handle from this library, freed once.
 */
void wanas_catalog_free(struct WanasCatalog *cat);

/**
 * The catalog's checksum as a new string.
 *
 * # Safety
 * `cat` must be a live handle and `out` a valid pointer.
 */
enum WanasStatus wanas_catalog_checksum(const struct WanasCatalog *cat, char **out);

/**
 * Algebra of catalog group `name` ("G1".."G7", case-insensitive).
 *
 * # Safety
 * `cat` must be a live handle, `name` NUL-terminated and `out` valid.
 */
enum WanasStatus wanas_algebra_from_group(const struct WanasCatalog *cat,
                                          const char *name,
                                          struct WanasAlgebra **out);

/**
 * Algebra from a spec document, the same JSON the CLI's `--spec-file` takes.
 *
 * # Safety
 * `json` must be NUL-terminated and `out` valid.
 */
enum WanasStatus wanas_algebra_from_json(const char *json, struct WanasAlgebra **out);

/**
 * # Safety
 * `alg` must be NULL or a handle from this library, freed once.
 */
void wanas_algebra_free(struct WanasAlgebra *alg);

/**
 * Sets `*holds` to whether the Jacobi identity holds identically or on the
 * algebra's constraint variety.
 *
 * # Safety
 * `alg` must be a live handle and `holds` valid.
 */
enum WanasStatus wanas_algebra_jacobi(const struct WanasAlgebra *alg, bool *holds);

/**
 * Every tensor of the chosen connection as JSON, symbolic or at the point
 * `at` (e.g. "alpha=1,beta=-1/2"; NULL for symbolic).
 *
 * # Safety
 * `alg` must be a live handle, `at` NULL or NUL-terminated, `out` valid.
 */
enum WanasStatus wanas_tensors_json(const struct WanasAlgebra *alg,
                                    enum WanasConnection connection,
                                    const char *at,
                                    char **out);

/**
 * Decides whether the algebra at `at` is an algebraic Wanas soliton.
 *
 * # Safety
 * `alg` must be a live handle, `at` NUL-terminated, `out` valid.
 */
enum WanasStatus wanas_check_json(const struct WanasAlgebra *alg,
                                  enum WanasKind kind,
                                  const char *at,
                                  char **out);

/**
 * Full reproduction report for one group, or all groups when `group` is NULL.
 * `*all_pass` (if non-NULL) receives the report's overall result.
 *
 * # Safety
 * `cat` must be a live handle, `group` NULL or NUL-terminated, `out` valid,
 * `all_pass` NULL or valid.
 */
enum WanasStatus wanas_verify_json(const struct WanasCatalog *cat,
                                   const char *group_name,
                                   bool *all_pass,
                                   char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WANAS_H */
