#ifndef TOWER_SEARCH_H
#define TOWER_SEARCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_ZERO_EXTENT = 2,
  TS_STATUS_DIMENSION_MISMATCH = 3,
  TS_STATUS_NOT_SORTED = 4,
  TS_STATUS_INDEX_OUT_OF_BOUNDS = 5,
  TS_STATUS_IO = 6,
  TS_STATUS_PARSE = 7,
  // The algorithm cannot search a tensor of this shape.
  TS_STATUS_UNSUPPORTED = 8,
  TS_STATUS_INTERNAL = 9,
} TsStatus;

typedef enum TsAlgorithm {
  TS_ALGORITHM_MAHL = 0,
  TS_ALGORITHM_BIRD = 1,
  TS_ALGORITHM_SADDLEBACK = 2,
  TS_ALGORITHM_ROWS = 3,
  TS_ALGORITHM_SCAN = 4,
} TsAlgorithm;

// A validated sorted tensor of 64-bit integers.
typedef struct TsTensor TsTensor;

typedef struct TsSearchResult {
  bool found;
  // Valid only when `found`; zeros otherwise.
  size_t index[3];
  uint64_t probes;
} TsSearchResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies `len` values (row-major, last axis fastest) into a new tensor.
//
// # Safety
// `values` must point to `len` readable `int64_t` (it may be null when
// `len` is 0) and `out` must be writable.
enum TsStatus ts_tensor_from_values(size_t n1,
                                    size_t n2,
                                    size_t n3,
                                    const int64_t *values,
                                    size_t len,
                                    struct TsTensor **out);

// Reads a tensor in the text format.
//
// # Safety
// `path` must be a nul-terminated string and `out` must be writable.
enum TsStatus ts_tensor_read_file(const char *path, struct TsTensor **out);

// Releases a tensor. Null is ignored.
//
// # Safety
// `tensor` must come from this library and not be used afterwards.
void ts_tensor_free(struct TsTensor *tensor);

// Writes the three extents to `out_dims[0..3]`.
//
// # Safety
// `tensor` must be a live handle and `out_dims` must have room for 3 values.
enum TsStatus ts_tensor_dims(const struct TsTensor *tensor, size_t *out_dims);

// Searches the whole tensor for `key`, counting probes.
//
// # Safety
// `tensor` must be a live handle and `out` must be writable.
enum TsStatus ts_search(const struct TsTensor *tensor,
                        int64_t key,
                        enum TsAlgorithm algorithm,
                        struct TsSearchResult *out);

// Evaluates the probe budget of the tower search for the given extents.
//
// # Safety
// `out` must be writable.
enum TsStatus ts_recurrence_bound(size_t n1, size_t n2, size_t n3, uint64_t *out);

// Message for the last failure on this thread, or null if there was none.
// The pointer stays valid until the next failing call on this thread.
const char *ts_last_error_message(void);

// Static description of a status code.
const char *ts_status_str(enum TsStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOWER_SEARCH_H */
