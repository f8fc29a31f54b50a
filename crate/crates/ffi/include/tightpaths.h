#ifndef TIGHTPATHS_H
#define TIGHTPATHS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TpPairAlgorithm {
  TP_PAIR_ALGORITHM_TIGHTEN = 0,
  TP_PAIR_ALGORITHM_STACKED = 1,
  TP_PAIR_ALGORITHM_WEIGHTS = 2,
} TpPairAlgorithm;

typedef enum TpStatus {
  TP_STATUS_OK = 0,
  TP_STATUS_NULL_POINTER = 1,
  TP_STATUS_INVALID_UTF8 = 2,
  TP_STATUS_PARSE = 3,
  TP_STATUS_VALIDATION = 4,
  TP_STATUS_UNKNOWN_VERTEX = 5,
  TP_STATUS_INVALID_THRESHOLD = 6,
  TP_STATUS_INDEX_OUT_OF_RANGE = 7,
  TP_STATUS_PANIC = 8,
} TpStatus;

/**
 * Acyclic vertex-weighted graph.
 */
typedef struct TpDag TpDag;

/**
 * Positively weighted digraph.
 */
typedef struct TpGraph TpGraph;

/**
 * Tight pairs returned by [`tp_dag_tight_pairs`].
 */
typedef struct TpPairList TpPairList;

/**
 * Tight paths returned by [`tp_graph_tight_paths`].
 */
typedef struct TpPathList TpPathList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *tp_last_error_message(void);

/**
 * Parses an edge list (`SRC DST COST` per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TpStatus tp_graph_parse_elist(const char *text, struct TpGraph **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle from [`tp_graph_parse_elist`].
 */
size_t tp_graph_vertex_count(const struct TpGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle; it is invalid afterwards.
 */
void tp_graph_free(struct TpGraph *graph);

/**
 * Tight paths at threshold `gamma`, from every vertex or only from `root`
 * when it is not null.
 *
 * # Safety
 * `graph` must be a live handle, `root` null or a NUL-terminated string,
 * `out` a writable pointer.
 */
enum TpStatus tp_graph_tight_paths(const struct TpGraph *graph,
                                   double gamma,
                                   double tolerance,
                                   const char *root,
                                   struct TpPathList **out);

/**
 * Number of paths, or 0 for a null list.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
size_t tp_path_list_len(const struct TpPathList *list);

/**
 * Vertex count of path `index`.
 *
 * # Safety
 * `list` must be a live handle and `out_len` writable.
 */
enum TpStatus tp_path_list_path_len(const struct TpPathList *list, size_t index, size_t *out_len);

/**
 * Cost of path `index`.
 *
 * # Safety
 * `list` must be a live handle and `out_cost` writable.
 */
enum TpStatus tp_path_list_cost(const struct TpPathList *list, size_t index, double *out_cost);

/**
 * Name of vertex `position` on path `index`. The string is owned by the
 * list.
 *
 * # Safety
 * `list` must be a live handle and `out_name` writable.
 */
enum TpStatus tp_path_list_vertex(const struct TpPathList *list,
                                  size_t index,
                                  size_t position,
                                  const char **out_name);

/**
 * # Safety
 * `list` must be null or a live handle; it is invalid afterwards.
 */
void tp_path_list_free(struct TpPathList *list);

/**
 * Parses a vertex-weighted dag (`v NAME WEIGHT` and `e SRC DST` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TpStatus tp_dag_parse_vwg(const char *text, struct TpDag **out);

/**
 * # Safety
 * `dag` must be null or a live handle; it is invalid afterwards.
 */
void tp_dag_free(struct TpDag *dag);

/**
 * All tight pairs at threshold `gamma`, ordered by endpoint weights.
 *
 * # Safety
 * `dag` must be a live handle and `out` a writable pointer.
 */
enum TpStatus tp_dag_tight_pairs(const struct TpDag *dag,
                                 double gamma,
                                 double tolerance,
                                 enum TpPairAlgorithm algorithm,
                                 struct TpPairList **out);

/**
 * Number of pairs, or 0 for a null list.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
size_t tp_pair_list_len(const struct TpPairList *list);

/**
 * Endpoint names of pair `index`. Strings are owned by the list.
 *
 * # Safety
 * `list` must be a live handle; `out_first` and `out_last` writable.
 */
enum TpStatus tp_pair_list_get(const struct TpPairList *list,
                               size_t index,
                               const char **out_first,
                               const char **out_last);

/**
 * # Safety
 * `list` must be null or a live handle; it is invalid afterwards.
 */
void tp_pair_list_free(struct TpPairList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TIGHTPATHS_H */
