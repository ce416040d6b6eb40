#ifndef GRR_H
#define GRR_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every call.
 */
typedef enum GrrStatus {
  GRR_STATUS_OK = 0,
  GRR_STATUS_INVALID_ARGUMENT = 1,
  GRR_STATUS_HYPOTHESIS_REFUSED = 2,
  GRR_STATUS_SEARCH_FAILURE = 3,
  GRR_STATUS_IO = 4,
  GRR_STATUS_PARSE = 5,
  GRR_STATUS_UNSUPPORTED = 6,
  GRR_STATUS_INTERNAL = 7,
} GrrStatus;

typedef enum GrrMode {
  GRR_MODE_GRR = 0,
  GRR_MODE_DRR = 1,
  GRR_MODE_ORR = 2,
} GrrMode;

typedef enum GrrQuantity {
  GRR_QUANTITY_COMMUTE = 0,
  /**
   * `P(g_n² = 1)`.
   */
  GRR_QUANTITY_INVOLUTION = 1,
} GrrQuantity;

/**
 * Opaque group handle.
 */
typedef struct GrrGroup GrrGroup;

/**
 * A Monte Carlo estimate with its Hoeffding radius at `δ = 0.01`.
 */
typedef struct GrrEstimate {
  double estimate;
  double radius;
  uint64_t samples;
  uint64_t hits;
} GrrEstimate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message on this thread, or null. Valid until the next
 * call on this thread.
 */
const char *grr_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void grr_string_free(char *s);

/**
 * Creates a group from a spec string such as `"symmetric:4"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GrrStatus grr_group_new(const char *spec, struct GrrGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `g` must come from [`grr_group_new`] and not have been freed.
 */
void grr_group_free(struct GrrGroup *g);

/**
 * Writes the order, or 0 for an infinite group.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum GrrStatus grr_group_order(const struct GrrGroup *g, size_t *out);

/**
 * Classification against the exception list of `mode`, as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum GrrStatus grr_classify(const struct GrrGroup *g, enum GrrMode m, char **out);

/**
 * Full regularity report for Cay(G, S) as JSON. `set` lists the
 * connection set; for [`GrrMode::Grr`] it must be closed under inverses.
 *
 * # Safety
 * `g` must be a live handle, `set` NUL-terminated and `out` valid.
 */
enum GrrStatus grr_verify(const struct GrrGroup *g, const char *set, enum GrrMode m, char **out);

/**
 * Whether Cay(G, S) is a regular representation of the given kind.
 *
 * # Safety
 * `g` must be a live handle, `set` NUL-terminated and `out` valid.
 */
enum GrrStatus grr_is_regular(const struct GrrGroup *g, const char *set, enum GrrMode m, bool *out);

/**
 * Runs the construction pipeline from `gens` (null for the declared
 * generators) and writes the trace as JSON. `budget` 0 means the default.
 * On a search failure the partial trace is still written.
 *
 * # Safety
 * `g` must be a live handle, `gens` null or NUL-terminated, `out` valid.
 */
enum GrrStatus grr_construct(const struct GrrGroup *g, const char *gens, size_t budget, char **out);

/**
 * Estimates a random-walk probability at walk length `n` with the lazy
 * uniform measure on the declared generators.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum GrrStatus grr_probe(const struct GrrGroup *g,
                         enum GrrQuantity q,
                         size_t n,
                         size_t samples,
                         uint64_t seed,
                         struct GrrEstimate *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRR_H */
