#ifndef CYCLIC_FACES_H
#define CYCLIC_FACES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible function.
 */
typedef enum CfStatus {
  CF_STATUS_OK = 0,
  CF_STATUS_NULL_POINTER = 1,
  /*
   `d < 2` or `v < d + 1`.
   */
  CF_STATUS_INVALID_PARAMS = 2,
  CF_STATUS_INDEX_OUT_OF_RANGE = 3,
  /*
   A precondition on a sequence or seed does not hold.
   */
  CF_STATUS_DOMAIN = 4,
  /*
   The oracle enumeration cap was exceeded.
   */
  CF_STATUS_RESOURCE_GUARD = 5,
  /*
   The value does not fit the requested fixed-width type.
   */
  CF_STATUS_OVERFLOW = 6,
  CF_STATUS_IO = 7,
  CF_STATUS_PANIC = 8,
} CfStatus;

typedef enum CfRoute {
  CF_ROUTE_DIRECT = 0,
  CF_ROUTE_TRIANGLE = 1,
  CF_ROUTE_STREAMING = 2,
  CF_ROUTE_ORACLE = 3,
} CfRoute;

typedef enum CfFormat {
  CF_FORMAT_JSON = 0,
  CF_FORMAT_CSV = 1,
  CF_FORMAT_TEXT = 2,
} CfFormat;

/*
 Opaque positive sequence, first logical index -1.
 */
typedef struct CfSequence CfSequence;

/*
 Opaque generalized Pascal triangle.
 */
typedef struct CfTriangle CfTriangle;

/*
 Shape summary of a sequence. Peak fields are meaningful only when
 `unimodal` is true. Indices are logical: the first entry is at -1.
 */
typedef struct CfShapeReport {
  bool log_concave;
  bool unimodal;
  int64_t peak_start;
  int64_t peak_end;
  size_t dip_count;
} CfShapeReport;

typedef struct CfAuditReport {
  bool passed;
  bool prefix_rows_ok;
  bool implications_ok;
  bool seeds_ok;
  bool final_row_ok;
} CfAuditReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the most recent failure on this thread, or null.
 Free the result with [`cf_string_free`].
 */
char *cf_last_error_message(void);

/*
 # Safety
 `s` must be null or a string returned by this library, freed only once.
 */
void cf_string_free(char *s);

/*
 Library version as a static NUL-terminated string.
 */
const char *cf_version(void);

/*
 h-vector `h_0 .. h_d` of `C(v,d)`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum CfStatus cf_h_vector(uint32_t v, uint32_t d, struct CfSequence **out);

/*
 Extended f-sequence `f_{-1} .. f_{d-1}, 1` of `C(v,d)` by the chosen
 route. `oracle_cap` only matters for [`CfRoute::Oracle`].

 # Safety
 `out` must be valid for a pointer write.
 */
enum CfStatus cf_f_vector(uint32_t v,
                          uint32_t d,
                          enum CfRoute route,
                          uint32_t oracle_cap,
                          struct CfSequence **out);

/*
 Wraps caller-supplied positive values for shape analysis.

 # Safety
 `values` must point to `len` readable `u64`s; `out` must be writable.
 */
enum CfStatus cf_sequence_from_u64(const uint64_t *values, size_t len, struct CfSequence **out);

/*
 # Safety
 `seq` must be null or a live handle from this library, freed only once.
 */
void cf_sequence_free(struct CfSequence *seq);

/*
 Number of entries; 0 for a null handle.

 # Safety
 `seq` must be null or a live handle.
 */
size_t cf_sequence_len(const struct CfSequence *seq);

/*
 Entry at logical `index` as a decimal string (free with
 [`cf_string_free`]).

 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_entry_string(const struct CfSequence *seq, int64_t index, char **out);

/*
 Entry at logical `index` as `u64`, or [`CfStatus::Overflow`].

 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_entry_u64(const struct CfSequence *seq, int64_t index, uint64_t *out);

/*
 All entries, space separated.

 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_to_string(const struct CfSequence *seq, char **out);

/*
 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_analyze(const struct CfSequence *seq, struct CfShapeReport *out);

/*
 Writes up to `capacity` dip indices into `buf` and the total count into
 `count`. Passing `capacity = 0` with a null `buf` only queries the count.

 # Safety
 `buf` must hold `capacity` writable `i64`s unless `capacity` is 0.
 */
enum CfStatus cf_sequence_dips(const struct CfSequence *seq,
                               int64_t *buf,
                               size_t capacity,
                               size_t *count);

/*
 One Pascal step with diagonal `seed`; the input must start with 1.

 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_pascal_extend(const struct CfSequence *seq,
                                        uint64_t seed,
                                        struct CfSequence **out);

/*
 Whether the Pascal extension by `seed` stays log-concave. Returns
 [`CfStatus::Domain`] when the input is not log-concave, does not start
 with 1, or `seed` exceeds its last entry.

 # Safety
 `seq` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_sequence_lemma_check(const struct CfSequence *seq, uint64_t seed, bool *out);

/*
 # Safety
 `out` must be valid for a pointer write.
 */
enum CfStatus cf_triangle_new(uint32_t v, uint32_t d, struct CfTriangle **out);

/*
 # Safety
 `tri` must be null or a live handle, freed only once.
 */
void cf_triangle_free(struct CfTriangle *tri);

/*
 Number of rows (`d + 1`); 0 for a null handle.

 # Safety
 `tri` must be null or a live handle.
 */
size_t cf_triangle_rows(const struct CfTriangle *tri);

/*
 Copy of row `k` as a new sequence handle.

 # Safety
 `tri` must be a live handle; `out` must be writable.
 */
enum CfStatus cf_triangle_row(const struct CfTriangle *tri, uint32_t k, struct CfSequence **out);

/*
 # Safety
 `out` must be writable.
 */
enum CfStatus cf_audit(uint32_t v, uint32_t d, struct CfAuditReport *out);

/*
 Runs the default sweep checks (log-concavity, Euler relation, sampled
 route equivalence) and renders the per-pair records. `v_min = 0` starts
 every dimension at `d + 1`; `jobs = 0` uses all cores.

 # Safety
 `out` and `passed` must be writable.
 */
enum CfStatus cf_sweep(uint32_t d_min,
                       uint32_t d_max,
                       uint32_t v_min,
                       uint32_t v_max,
                       size_t jobs,
                       enum CfFormat format,
                       char **out,
                       bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_FACES_H */
