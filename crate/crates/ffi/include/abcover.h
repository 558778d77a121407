#ifndef ABCOVER_H
#define ABCOVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbcBehavior {
  ABC_BEHAVIOR_DEGREE_PRESERVED = 0,
  ABC_BEHAVIOR_BIRATIONAL = 1,
  ABC_BEHAVIOR_EMBEDDING_A = 2,
  ABC_BEHAVIOR_EMBEDDING_B = 3,
  ABC_BEHAVIOR_HALVES_DEGREE = 4,
  ABC_BEHAVIOR_HALVES_DEGREE_SMOOTH_IMAGE = 5,
} AbcBehavior;

// Outcome of the complete-intersection obstruction search.
typedef enum AbcObstruction {
  ABC_OBSTRUCTION_SOLVABLE = 0,
  ABC_OBSTRUCTION_INFEASIBLE_AM_GM = 1,
  ABC_OBSTRUCTION_INFEASIBLE_EXHAUSTED = 2,
  ABC_OBSTRUCTION_SEARCH_BUDGET_EXCEEDED = 3,
} AbcObstruction;

// Result codes of fallible calls.
typedef enum AbcStatus {
  ABC_STATUS_OK = 0,
  ABC_STATUS_NULL_POINTER = 1,
  ABC_STATUS_INVALID_UTF8 = 2,
  ABC_STATUS_EMPTY_MULTIDEGREE = 3,
  ABC_STATUS_DEGREE_TOO_SMALL = 4,
  ABC_STATUS_CODIM_TOO_LARGE = 5,
  ABC_STATUS_INVALID_COVER = 6,
  ABC_STATUS_INVALID_PARAMETER = 7,
  ABC_STATUS_INTERNAL = 8,
} AbcStatus;

// Strongest behaviour shown by a configuration.
typedef enum AbcSummary {
  ABC_SUMMARY_INCONCLUSIVE = 0,
  ABC_SUMMARY_DEGREE_PRESERVED = 1,
  ABC_SUMMARY_HALVES_DEGREE = 2,
  ABC_SUMMARY_BIRATIONAL = 3,
  ABC_SUMMARY_EMBEDDING = 4,
} AbcSummary;

// A smooth complete intersection in projective space.
typedef struct AbcCi AbcCi;

// A cover description.
typedef struct AbcCover AbcCover;

// All computed data for one (complete intersection, cover) pair.
typedef struct AbcReport AbcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread, or NULL.
// The pointer stays valid until the next failing call on this thread.
const char *abc_last_error(void);

// Library version as a static NUL-terminated string.
const char *abc_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void abc_string_free(char *s);

// Creates `CI(P^ambient; degrees)`; the degrees are sorted.
//
// # Safety
// `degrees` must point to `len` readable integers; `out` must be writable.
enum AbcStatus abc_ci_new(int64_t ambient, const int64_t *degrees, size_t len, struct AbcCi **out);

// # Safety
// `ci` must be NULL or a handle from [`abc_ci_new`], not yet freed.
void abc_ci_free(struct AbcCi *ci);

// `h^0(O_Y(a))` as a decimal string, or NULL if `ci` is NULL.
//
// # Safety
// `ci` must be NULL or a live handle.
char *abc_ci_h0(const struct AbcCi *ci, int64_t a);

// Parses `cyclic:n,k`, `product:n1,k1;n2,k2;...` or `split:t1,...:ram`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum AbcStatus abc_cover_parse(const char *text, struct AbcCover **out);

// The simple cyclic cover of order `n` with twist `k`.
//
// # Safety
// `out` must be writable.
enum AbcStatus abc_cover_simple_cyclic(uint64_t n, int64_t k, struct AbcCover **out);

// The fibre product of cyclic covers with the given orders and twists.
//
// # Safety
// `orders` and `twists` must each point to `len` readable values; `out`
// must be writable.
enum AbcStatus abc_cover_product(const uint64_t *orders,
                                 const int64_t *twists,
                                 size_t len,
                                 struct AbcCover **out);

// # Safety
// `cover` must be NULL or a live handle, not yet freed.
void abc_cover_free(struct AbcCover *cover);

// Computes invariants, behaviour certificates and the obstruction for the
// pair. The inputs are copied; they may be freed afterwards.
//
// # Safety
// `ci` and `cover` must be live handles; `out` must be writable.
enum AbcStatus abc_report_new(const struct AbcCi *ci,
                              const struct AbcCover *cover,
                              struct AbcReport **out);

// # Safety
// `report` must be NULL or a live handle, not yet freed.
void abc_report_free(struct AbcReport *report);

// Dimension `m` of the cover; 0 if `report` is NULL.
//
// # Safety
// `report` must be NULL or a live handle.
int64_t abc_report_dim(const struct AbcReport *report);

// The integer `s` with `K_X = L^s`; 0 if `report` is NULL.
//
// # Safety
// `report` must be NULL or a live handle.
int64_t abc_report_subcanonicity(const struct AbcReport *report);

// `L^m` as a decimal string (NULL if `report` is NULL).
//
// # Safety
// `report` must be NULL or a live handle.
char *abc_report_l_top(const struct AbcReport *report);

// `K_X^m` as a decimal string (NULL if `report` is NULL).
//
// # Safety
// `report` must be NULL or a live handle.
char *abc_report_k_top(const struct AbcReport *report);

// Geometric genus as a decimal string (NULL if `report` is NULL).
//
// # Safety
// `report` must be NULL or a live handle.
char *abc_report_geometric_genus(const struct AbcReport *report);

// Strongest behaviour shown; `Inconclusive` if `report` is NULL.
//
// # Safety
// `report` must be NULL or a live handle.
enum AbcSummary abc_report_summary(const struct AbcReport *report);

// Whether a certificate for `behavior` was found.
//
// # Safety
// `report` must be NULL or a live handle.
bool abc_report_has_behavior(const struct AbcReport *report, enum AbcBehavior behavior);

// Outcome of the obstruction search.
//
// # Safety
// `report` must be a live handle.
enum AbcObstruction abc_report_obstruction(const struct AbcReport *report);

// The full row as a JSON object (NULL if `report` is NULL).
//
// # Safety
// `report` must be NULL or a live handle.
char *abc_report_json(const struct AbcReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABCOVER_H */
