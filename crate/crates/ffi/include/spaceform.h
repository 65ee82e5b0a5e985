#ifndef SPACEFORM_H
#define SPACEFORM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SfStatus {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_TABLE = 2,
  SF_STATUS_PARSE_ERROR = 3,
  SF_STATUS_INVALID_TUPLE = 4,
  SF_STATUS_TOO_LARGE = 5,
  SF_STATUS_BAD_PARAMETER = 6,
  /**
   * The group is not a space-form group; the message holds the reason.
   */
  SF_STATUS_REJECTED = 7,
  SF_STATUS_INTERNAL = 8,
  SF_STATUS_PANIC = 9,
} SfStatus;

/**
 * Opaque handle to a finite group given by its Cayley table.
 */
typedef struct SfGroup SfGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sf_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sf_string_free(char *s);

/**
 * Builds a group from a row-major `n × n` table with identity 0.
 *
 * # Safety
 * `table` must point to `n * n` readable entries; `out` must be writable.
 */
enum SfStatus sf_group_from_table(size_t n, const uint32_t *table, struct SfGroup **out);

/**
 * Parses the text table format: the order on the first line, then rows.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SfStatus sf_group_parse(const char *text, struct SfGroup **out);

/**
 * Builds the group of a canonical tuple such as
 * `TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4`.
 *
 * # Safety
 * `tuple` must be a nul-terminated string; `out` must be writable.
 */
enum SfStatus sf_build_tuple(const char *tuple, struct SfGroup **out);

/**
 * Releases a group. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void sf_group_free(struct SfGroup *g);

/**
 * Order of the group, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sf_group_order(const struct SfGroup *g);

/**
 * Product `a * b`, or `SIZE_MAX` if either id is out of range.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sf_group_mul(const struct SfGroup *g, size_t a, size_t b);

/**
 * Classifies a group. On success `*out` receives the canonical tuple.
 * A group that is not a space-form group gives `Rejected`, and the error
 * message reads `REJECT <code>: <reason>`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum SfStatus sf_classify(const struct SfGroup *g, bool paranoid, char **out);

/**
 * Decides isomorphism by exhaustive search.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum SfStatus sf_is_isomorphic(const struct SfGroup *a, const struct SfGroup *b, bool *out);

/**
 * Every tuple of order at most `max_order`, one per line in canonical order.
 *
 * # Safety
 * `out` must be writable.
 */
enum SfStatus sf_enumerate(uint64_t max_order, char **out);

/**
 * Writes the number of tuples of order `n` to `counts[n - 1]` for
 * `n = 1..=max_order`. `len` must be at least `max_order`.
 *
 * # Safety
 * `counts` must point to `len` writable entries.
 */
enum SfStatus sf_count_by_order(uint64_t max_order, size_t *counts, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPACEFORM_H */
