#ifndef INTERVALIA_H
#define INTERVALIA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  IV_STATUS_OK = 0,
  IV_STATUS_NULL_ARGUMENT = 1,
  IV_STATUS_INVALID_UTF8 = 2,
  IV_STATUS_PARSE_ERROR = 3,
  IV_STATUS_NOT_AN_INTERVAL_ORDER = 4,
  IV_STATUS_DEPTH_EXCEEDED = 5,
  IV_STATUS_HEIGHT_EXCEEDED = 6,
  IV_STATUS_TOO_LARGE = 7,
  IV_STATUS_INDEX_OUT_OF_RANGE = 8,
  IV_STATUS_INTERNAL = 9,
  IV_STATUS_PANIC = 10,
} IvStatus;

typedef struct IvOrder IvOrder;

typedef struct IvPerm IvPerm;

typedef struct IvRep IvRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread. Owned by the library;
 * valid until the next failing call.
 */
const char *iv_last_error(void);

/**
 * Static version string.
 */
const char *iv_version(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void iv_string_free(char *s);

/**
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
IvStatus iv_order_from_ascent(const char *text, IvOrder **out);

/**
 * Accepts the order JSON document (1-based relation pairs).
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
IvStatus iv_order_from_json(const char *json, IvOrder **out);

/**
 * # Safety
 * `order` comes from this library or is null.
 */
void iv_order_free(IvOrder *order);

/**
 * # Safety
 * `order` is a live handle; `out` is writable.
 */
IvStatus iv_order_len(const IvOrder *order, size_t *out);

/**
 * 1 when `x` precedes `y` (0-based ids).
 *
 * # Safety
 * `order` is a live handle; `out` is writable.
 */
IvStatus iv_order_precedes(const IvOrder *order, size_t x, size_t y, int32_t *out);

/**
 * Analysis document as JSON; free with `iv_string_free`.
 *
 * # Safety
 * `order` is a live handle; `out` is writable.
 */
IvStatus iv_order_analyze_json(const IvOrder *order, char **out);

/**
 * # Safety
 * `order` is a live handle; `out` is writable.
 */
IvStatus iv_order_two_count(const IvOrder *order, IvRep **out);

/**
 * Writes the verdict document as JSON.
 *
 * # Safety
 * `order` is a live handle; `out` is writable.
 */
IvStatus iv_order_k_count_json(const IvOrder *order, size_t k, bool allow_large, char **out);

/**
 * # Safety
 * `text` is a NUL-terminated string like `"[2,1,3]"`; `out` is writable.
 */
IvStatus iv_perm_parse(const char *text, IvPerm **out);

/**
 * # Safety
 * `perm` comes from this library or is null.
 */
void iv_perm_free(IvPerm *perm);

/**
 * Longest decreasing subsequence.
 *
 * # Safety
 * `perm` is a live handle; `out` is writable.
 */
IvStatus iv_perm_depth(const IvPerm *perm, size_t *out);

/**
 * # Safety
 * `perm` is a live handle; `out` is writable.
 */
IvStatus iv_perm_analyze_json(const IvPerm *perm, char **out);

/**
 * # Safety
 * `perm` is a live handle; `out` is writable.
 */
IvStatus iv_perm_two_count(const IvPerm *perm, IvRep **out);

/**
 * # Safety
 * `perm` is a live handle; `out` is writable.
 */
IvStatus iv_perm_k_count_json(const IvPerm *perm, size_t k, bool allow_large, char **out);

/**
 * # Safety
 * `rep` comes from this library or is null.
 */
void iv_rep_free(IvRep *rep);

/**
 * # Safety
 * `rep` is a live handle; `out` is writable.
 */
IvStatus iv_rep_len(const IvRep *rep, size_t *out);

/**
 * Number of distinct interval lengths.
 *
 * # Safety
 * `rep` is a live handle; `out` is writable.
 */
IvStatus iv_rep_length_count(const IvRep *rep, size_t *out);

/**
 * Endpoints of element `i` (0-based) as `"p/q"` strings; free both.
 *
 * # Safety
 * `rep` is a live handle; `l` and `r` are writable.
 */
IvStatus iv_rep_interval(const IvRep *rep, size_t i, char **l, char **r);

/**
 * Representation document as JSON.
 *
 * # Safety
 * `rep` is a live handle; `out` is writable.
 */
IvStatus iv_rep_to_json(const IvRep *rep, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERVALIA_H */
