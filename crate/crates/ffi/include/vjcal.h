#ifndef VJCAL_H
#define VJCAL_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code for every fallible FFI call.
 */
typedef enum VjStatus {
  VjStatus_Ok = 0,
  VjStatus_NullArgument = 1,
  VjStatus_ZeroDenominator = 2,
  VjStatus_DivisionByZero = 3,
  VjStatus_ParseError = 4,
  VjStatus_DomainError = 5,
} VjStatus;

/**
 * Opaque exact rational handle.
 */
typedef struct VjRational VjRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates the rational `num/den` in lowest terms.
 */
enum VjStatus vj_rational_new(int64_t num, int64_t den, struct VjRational **out);

/**
 * Parses "n/d" or a bare integer.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string.
 */
enum VjStatus vj_rational_parse(const char *text, struct VjRational **out);

/**
 * Releases a rational handle. Null is a no-op.
 *
 * # Safety
 * `ptr` must be null or an unreleased handle from this library.
 */
void vj_rational_free(struct VjRational *ptr);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `ptr` must be null or an unreleased string from this library.
 */
void vj_string_free(char *ptr);

/**
 * The rule of three: `b·c/d` exactly; `d` must be nonzero.
 *
 * # Safety
 * Handles must be valid; see module docs.
 */
enum VjStatus vj_rule_of_three(const struct VjRational *b,
                               const struct VjRational *c,
                               const struct VjRational *d,
                               struct VjRational **out);

/**
 * Reduces `r` onto the circle `[0, modulus)`; `modulus` must be positive.
 *
 * # Safety
 * Handles must be valid; see module docs.
 */
enum VjStatus vj_rational_mod_circle(const struct VjRational *r,
                                     uint64_t modulus,
                                     struct VjRational **out);

/**
 * Canonical "n/d" rendering; caller frees with `vj_string_free`.
 *
 * # Safety
 * Handle must be valid; see module docs.
 */
char *vj_rational_to_string(const struct VjRational *r);

/**
 * Mixed-number "w n/d" rendering; caller frees with `vj_string_free`.
 *
 * # Safety
 * Handle must be valid; see module docs.
 */
char *vj_rational_to_mixed_string(const struct VjRational *r);

/**
 * Decimal rendering rounded half-away-from-zero; `places` at most 50.
 * Caller frees with `vj_string_free`.
 *
 * # Safety
 * Handle must be valid; see module docs.
 */
char *vj_rational_to_decimal_string(const struct VjRational *r, uintptr_t places);

/**
 * Moon nakṣatra position after `fortnight` fortnights under the default
 * five-year-yuga parameters. Writes the segment index and a new handle for
 * the progress fraction in [0, 1).
 */
enum VjStatus vj_moon_position(uint64_t fortnight,
                               uint64_t *out_segment,
                               struct VjRational **out_progress);

/**
 * Sun nakṣatra position after `fortnight` fortnights under the default
 * parameters (model-completed 135/124 rate).
 */
enum VjStatus vj_sun_position(uint64_t fortnight,
                              uint64_t *out_segment,
                              struct VjRational **out_progress);

/**
 * Years elapsed between two ecliptic longitudes (degrees) at a precession
 * rate in years per degree; all three are rational handles.
 *
 * # Safety
 * Handles must be valid; see module docs.
 */
enum VjStatus vj_elapsed_years(const struct VjRational *longitude_a_deg,
                               const struct VjRational *longitude_b_deg,
                               const struct VjRational *years_per_degree,
                               struct VjRational **out);

/**
 * Steps back from a known astronomical year by the elapsed years (rounded
 * half away from zero), writing the resulting astronomical year.
 *
 * # Safety
 * Handles must be valid; see module docs.
 */
enum VjStatus vj_conjunction_year(int64_t known_astronomical,
                                  const struct VjRational *elapsed_years,
                                  int64_t *out_astronomical);

/**
 * BCE/CE label for an astronomical year (0 = 1 BCE); caller frees with
 * `vj_string_free`.
 */
char *vj_epoch_label(int64_t astronomical);

/**
 * Greedy unit-fraction denominators of a proper fraction in (0,1), as a
 * comma-separated string like "2,12,186"; caller frees with
 * `vj_string_free`.
 *
 * # Safety
 * Handle must be valid; see module docs.
 */
enum VjStatus vj_unit_fraction_denominators(const struct VjRational *r, char **out);

/**
 * Whether the whole-number tally model and the rational model agree at the
 * given fortnight under the default parameters (they always should).
 */
enum VjStatus vj_models_agree(uint64_t fortnight, bool *out_agree);

/**
 * Full default yuga table as a JSON array (the same schema as the CLI's
 * `yuga table --format json`); caller frees with `vj_string_free`.
 */
char *vj_yuga_table_json(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VJCAL_H */
