#ifndef RATLINK_H
#define RATLINK_H

#include <stdbool.h>
#include <stdint.h>

typedef enum RatlinkStatus {
  RATLINK_STATUS_OK = 0,
  RATLINK_STATUS_NULL_POINTER = 1,
  RATLINK_STATUS_INVALID_INPUT = 2,
  RATLINK_STATUS_OUT_OF_RANGE = 3,
  RATLINK_STATUS_NOT_TWO_COMPONENT = 4,
  RATLINK_STATUS_OVERFLOW = 5,
  RATLINK_STATUS_INTERNAL = 6,
} RatlinkStatus;

/**
 * Opaque frieze handle.
 */
typedef struct RatlinkFrieze RatlinkFrieze;

/**
 * Opaque Jones polynomial handle.
 */
typedef struct RatlinkJones RatlinkJones;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *ratlink_last_error(void);

/**
 * Writhe of `D(T(p/q))`; with `plus_minus` nonzero, the second component
 * is reversed.
 *
 * # Safety
 * `out` must be valid for a write of `int64_t`.
 */
enum RatlinkStatus ratlink_writhe(uint64_t p, uint64_t q, bool plus_minus, int64_t *out);

/**
 * Numerators of `p/q`, `i`, `r`, `ir`, in that order.
 *
 * # Safety
 * `out` must point to four writable `uint64_t`.
 */
enum RatlinkStatus ratlink_orbit(uint64_t p, uint64_t q, uint64_t *out);

/**
 * Frieze of `p/q`.
 *
 * # Safety
 * `out` must be valid for a write of a pointer.
 */
enum RatlinkStatus ratlink_frieze_new(uint64_t p, uint64_t q, struct RatlinkFrieze **out);

/**
 * Frieze of an `L`/`R` word; the empty string gives the frieze of `1/2`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` valid for a write.
 */
enum RatlinkStatus ratlink_frieze_from_word(const char *word, struct RatlinkFrieze **out);

/**
 * Largest entry, `order` (period) and `height` (interior rows).
 *
 * # Safety
 * `frieze` must come from `ratlink_frieze_new`; outputs may be null.
 */
enum RatlinkStatus ratlink_frieze_shape(const struct RatlinkFrieze *frieze,
                                        uint64_t *max,
                                        uint64_t *order,
                                        uint64_t *height);

/**
 * Entry at `row` (0 and `height + 1` are the rows of 1s) and half-column
 * `col`. Positions off the row's lattice give `InvalidInput`.
 *
 * # Safety
 * `frieze` must come from `ratlink_frieze_new`; `out` valid for a write.
 */
enum RatlinkStatus ratlink_frieze_entry(const struct RatlinkFrieze *frieze,
                                        uint64_t row,
                                        int64_t col,
                                        uint64_t *out);

/**
 * JSON `{"order", "rows", "offsets"}`; free with `ratlink_string_free`.
 *
 * # Safety
 * `frieze` must come from `ratlink_frieze_new`; `out` valid for a write.
 */
enum RatlinkStatus ratlink_frieze_json(const struct RatlinkFrieze *frieze, char **out);

/**
 * # Safety
 * `frieze` must be null or come from `ratlink_frieze_new`, freed once.
 */
void ratlink_frieze_free(struct RatlinkFrieze *frieze);

/**
 * Jones polynomial of `D(T(p/q))`, or of the link with its second
 * component reversed when `plus_minus` is nonzero.
 *
 * # Safety
 * `out` must be valid for a write of a pointer.
 */
enum RatlinkStatus ratlink_jones_new(uint64_t p,
                                     uint64_t q,
                                     bool plus_minus,
                                     struct RatlinkJones **out);

/**
 * Number of terms in `t^(1/2)`.
 *
 * # Safety
 * `jones` must come from `ratlink_jones_new`; `out` valid for a write.
 */
enum RatlinkStatus ratlink_jones_term_count(const struct RatlinkJones *jones, uint64_t *out);

/**
 * Term `index` in descending order: the power of `t^(1/2)` and its
 * coefficient. Coefficients beyond `int64_t` give `Overflow`.
 *
 * # Safety
 * `jones` must come from `ratlink_jones_new`; outputs valid for writes.
 */
enum RatlinkStatus ratlink_jones_term(const struct RatlinkJones *jones,
                                      uint64_t index,
                                      int64_t *exponent,
                                      int64_t *coefficient);

/**
 * Text form `t^(k/2)(...)`. With `use_prefactor` zero a default `k` is
 * chosen. Free with `ratlink_string_free`.
 *
 * # Safety
 * `jones` must come from `ratlink_jones_new`; `out` valid for a write.
 */
enum RatlinkStatus ratlink_jones_string(const struct RatlinkJones *jones,
                                        bool use_prefactor,
                                        int64_t prefactor,
                                        char **out);

/**
 * # Safety
 * `jones` must be null or come from `ratlink_jones_new`, freed once.
 */
void ratlink_jones_free(struct RatlinkJones *jones);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void ratlink_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATLINK_H */
