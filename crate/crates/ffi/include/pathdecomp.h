#ifndef PATHDECOMP_H
#define PATHDECOMP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_INVALID_INPUT = 2,
  PD_STATUS_NOT_CONNECTED = 3,
  PD_STATUS_MAX_DEGREE = 4,
  PD_STATUS_NO_EDGES = 5,
  PD_STATUS_BUDGET_EXHAUSTED = 6,
  PD_STATUS_OUT_OF_RANGE = 7,
  PD_STATUS_INTERNAL = 8,
} PdStatus;

/*
 Opaque decomposition handle.
 */
typedef struct PdDecomposition PdDecomposition;

/*
 Opaque graph handle.
 */
typedef struct PdGraph PdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty if none. The
 pointer stays valid until the next failing call on this thread.
 */
const char *pd_last_error_message(void);

/*
 Parses one graph6 line.

 # Safety
 `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum PdStatus pd_graph_from_graph6(const char *text, struct PdGraph **out);

/*
 Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint ids.

 # Safety
 `edges` must point to `2 * m` readable values (or be null when `m` is 0)
 and `out` must be writable.
 */
enum PdStatus pd_graph_from_edges(size_t n, const size_t *edges, size_t m, struct PdGraph **out);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle from this library.
 */
size_t pd_graph_order(const struct PdGraph *g);

/*
 Number of edges, or 0 for a null handle.

 # Safety
 `g` must be null or a live handle from this library.
 */
size_t pd_graph_size(const struct PdGraph *g);

/*
 # Safety
 `g` must be null or a handle from this library not yet freed.
 */
void pd_graph_free(struct PdGraph *g);

/*
 Decomposes `g` into at most `ceil(n/2)` paths. `budget` bounds each exact
 base-case search in nodes; 0 selects the default.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum PdStatus pd_solve(const struct PdGraph *g, uint64_t budget, struct PdDecomposition **out);

/*
 Empty decomposition, to be filled with [`pd_decomposition_push_path`].
 */
struct PdDecomposition *pd_decomposition_new(void);

/*
 Appends a path given by `len` vertex ids. The path is not checked here;
 use [`pd_verify`].

 # Safety
 `d` must be a live handle and `vertices` must point to `len` values.
 */
enum PdStatus pd_decomposition_push_path(struct PdDecomposition *d,
                                         const size_t *vertices,
                                         size_t len);

/*
 Number of paths, or 0 for a null handle.

 # Safety
 `d` must be null or a live handle.
 */
size_t pd_decomposition_len(const struct PdDecomposition *d);

/*
 Number of vertices on path `i`, or 0 if there is no such path.

 # Safety
 `d` must be null or a live handle.
 */
size_t pd_path_len(const struct PdDecomposition *d, size_t i);

/*
 Copies up to `cap` vertices of path `i` into `buf` and stores the path's
 full vertex count in `written`.

 # Safety
 `d` must be a live handle, `buf` writable for `cap` values, `written` writable.
 */
enum PdStatus pd_path_vertices(const struct PdDecomposition *d,
                               size_t i,
                               size_t *buf,
                               size_t cap,
                               size_t *written);

/*
 Checks that `d` partitions the edges of `g` into simple paths. `valid`
 and `good` (valid and at most `ceil(n/2)` paths) are written on success.

 # Safety
 `g` and `d` must be live handles; `valid` and `good` writable.
 */
enum PdStatus pd_verify(const struct PdGraph *g,
                        const struct PdDecomposition *d,
                        bool *valid,
                        bool *good);

/*
 # Safety
 `d` must be null or a handle from this library not yet freed.
 */
void pd_decomposition_free(struct PdDecomposition *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PATHDECOMP_H */
