/* C interface for the braidrep enumeration engine. */

#ifndef BRAIDREP_H
#define BRAIDREP_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define BR_OK 0

// A pointer argument was null.
#define BR_ERR_NULL 1

// Degree or level out of the supported range.
#define BR_ERR_RANGE 2

// The arguments are outside an operation's domain.
#define BR_ERR_DOMAIN 3

// Index beyond the end of a collection.
#define BR_ERR_INDEX 4

// Internal failure (a bug; never expected).
#define BR_ERR_INTERNAL 5

// An enumerated cycle decomposition; create with `br_cycle_set_new`, release
// with `br_cycle_set_free`.
typedef struct br_cycle_set br_cycle_set;

// Census counts for one `(n, r)`, written into the out-parameters.
// `conjecture` receives -1 (out of domain), 0 (fails) or 1 (holds).
typedef struct br_census_t {
  uint32_t n;
  uint8_t degree;
  uint64_t total_reps;
  uint64_t type1_cycles;
  uint64_t type2_cycles;
  uint64_t transitive_reps;
  uint64_t subgroup_count;
  int8_t conjecture;
} br_census_t;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Enumerates the level-3 cycle decomposition for degree `r` and stores a
// handle in `*out`.
//
// # Safety
// `out` must be a valid pointer to writable memory for one pointer.
int br_cycle_set_new(uint8_t r, struct br_cycle_set **out);

// Releases a handle from `br_cycle_set_new`. Null is a no-op.
//
// # Safety
// `set` must be null or a pointer previously returned by
// `br_cycle_set_new` that has not been freed yet.
void br_cycle_set_free(struct br_cycle_set *set);

// Number of cycles in the decomposition.
//
// # Safety
// `set` must be a live handle from `br_cycle_set_new`.
uint64_t br_cycle_set_len(const struct br_cycle_set *set);

// Sum of all cycle periods, i.e. the total number of representations
// (always `(r!)^2`).
//
// # Safety
// `set` must be a live handle from `br_cycle_set_new`.
uint64_t br_cycle_set_total_reps(const struct br_cycle_set *set);

// Copies the cycle at `index` into the out-parameters: canonical vertex
// ranks, period, and whether the cycle is type II.
//
// # Safety
// `set` must be a live handle; the out pointers must each be null or valid.
int br_cycle_set_cycle(const struct br_cycle_set *set,
                       uint64_t index,
                       uint32_t *vertex0,
                       uint32_t *vertex1,
                       uint64_t *period,
                       int *is_type2);

// Renders the cycle set in the reference-table text format
// (`type2_only != 0` restricts to type II). The string must be released
// with `br_string_free`.
//
// # Safety
// `set` must be a live handle; `out` must be valid for one pointer write.
int br_cycle_set_table(const struct br_cycle_set *set, int type2_only, char **out);

// Renders the cycle set as JSON (ranks only; degree-tagged). Release with
// `br_string_free`.
//
// # Safety
// `set` must be a live handle; `out` must be valid for one pointer write.
int br_cycle_set_json(const struct br_cycle_set *set, char **out);

// Renders the shift graph in dot format. Release with `br_string_free`.
//
// # Safety
// `set` must be a live handle; `out` must be valid for one pointer write.
int br_cycle_set_dot(const struct br_cycle_set *set, char **out);

// Writes `|Hom(K_n, S_r)|` into `*count`.
//
// # Safety
// `count` must be valid for one u64 write.
int br_hom_kn_count(uint32_t n, uint8_t r, uint64_t *count);

// Writes `|Hom(B_n, S_r)|` into `*count`.
//
// # Safety
// `count` must be valid for one u64 write.
int br_hom_bn_count(uint32_t n, uint8_t r, uint64_t *count);

// Renders `Hom(K_n, S_r)` as JSON. Release with `br_string_free`.
//
// # Safety
// `out` must be valid for one pointer write.
int br_hom_kn_json(uint32_t n, uint8_t r, char **out);

// Renders `Hom(B_n, S_r)` as JSON. Release with `br_string_free`.
//
// # Safety
// `out` must be valid for one pointer write.
int br_hom_bn_json(uint32_t n, uint8_t r, char **out);

// Fills `*out` with the census of `(n, r)`.
//
// # Safety
// `out` must be valid for one `BrCensus` write.
int br_census(uint32_t n, uint8_t r, struct br_census_t *out);

// Probes the triviality/transitivity conjecture at `(n, r)`; writes 1 or 0
// into `*holds`. Returns `BR_ERR_DOMAIN` outside `n >= 5`, `r <= n`.
//
// # Safety
// `holds` must be valid for one int write.
int br_conjecture_probe(uint32_t n, uint8_t r, int *holds);

// Re-derives every embedded reference table and count. Writes 1 into
// `*all_passed` when everything matches; the full textual report goes to
// `*report` (release with `br_string_free`; pass null to skip it).
//
// # Safety
// `all_passed` must be valid for one int write; `report` null or valid.
int br_verify_reference(int *all_passed, char **report);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a string pointer returned by this library that has
// not been freed yet.
void br_string_free(char *s);

// The crate version as a static string; do not free.
const char *br_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDREP_H */
