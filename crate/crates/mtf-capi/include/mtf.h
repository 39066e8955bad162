/* C interface to the maximal triangle-free laboratory. */

#ifndef MTF_H
#define MTF_H

/* Generated by cbindgen from mtf-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum MtfStatus {
  MTF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  MTF_STATUS_NULL_POINTER = 1,
  /**
   * Arguments violate a precondition (range, divisibility, regime).
   */
  MTF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Malformed graph6 text or other unparsable input.
   */
  MTF_STATUS_PARSE = 3,
  /**
   * The instance exceeds a capacity or exact-search regime.
   */
  MTF_STATUS_CAPACITY = 4,
  /**
   * A hypothesis of the checked statement is violated by the input.
   */
  MTF_STATUS_HYPOTHESIS = 5,
  /**
   * An internal invariant failed; the library considers this a bug.
   */
  MTF_STATUS_INTERNAL = 6,
} MtfStatus;

/**
 * Opaque graph handle (a simple undirected graph on at most 64 vertices).
 */
typedef struct MtfGraph MtfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mtf_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs laid out as
 * `[u0, v0, u1, v1, ...]`. Duplicate edges collapse.
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable `uint32_t`s (or be
 * null when `edge_count` is 0); `out` must be a valid pointer.
 */
enum MtfStatus mtf_graph_from_edges(uint32_t n,
                                    const uint32_t *endpoints,
                                    uintptr_t edge_count,
                                    struct MtfGraph **out);

/**
 * Decodes a graph6 string (`1 <= n <= 64`).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid.
 */
enum MtfStatus mtf_graph_from_graph6(const char *text, struct MtfGraph **out);

/**
 * Encodes the graph in graph6 form; release the string with
 * `mtf_string_free`.
 *
 * # Safety
 * `g` must be a live handle from this library; `out` must be valid.
 */
enum MtfStatus mtf_graph_to_graph6(const struct MtfGraph *g, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by this library and not yet freed.
 */
void mtf_string_free(char *s);

/**
 * Releases a graph handle.
 *
 * # Safety
 * `g` must have been returned by this library and not yet freed.
 */
void mtf_graph_free(struct MtfGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
uint32_t mtf_graph_vertex_count(const struct MtfGraph *g);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
uint64_t mtf_graph_edge_count(const struct MtfGraph *g);

/**
 * Number of triangles.
 *
 * # Safety
 * `g` must be a live handle.
 */
uint64_t mtf_graph_triangle_count(const struct MtfGraph *g);

/**
 * True iff triangle-free and every non-edge closes a triangle.
 *
 * # Safety
 * `g` must be a live handle.
 */
bool mtf_graph_is_maximal_triangle_free(const struct MtfGraph *g);

/**
 * Exact number of maximal independent sets (fits u64 for n <= 64).
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum MtfStatus mtf_count_mis(const struct MtfGraph *g, uint64_t *out);

/**
 * Size of a maximum family of vertex-disjoint P3's (n <= 30).
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum MtfStatus mtf_max_p3_packing_size(const struct MtfGraph *g, uint32_t *out);

/**
 * Checks `MIS(G) <= 2^(n/2 - k/25)` on a triangle-free graph: writes the
 * logarithmic slack and whether the exact integer form holds.
 *
 * # Safety
 * `g` must be a live handle; `out_slack` and `out_exact_holds` must be
 * valid.
 */
enum MtfStatus mtf_mis_bound_check(const struct MtfGraph *g,
                                   double *out_slack,
                                   bool *out_exact_holds);

/**
 * Exhaustive max-cut (n <= 28): writes the cut size and the deterministic
 * X-side mask (vertex 0 on the X side, smallest mask among maximizers).
 *
 * # Safety
 * `g` must be a live handle; `out_size` and `out_x_mask` must be valid.
 */
enum MtfStatus mtf_max_cut(const struct MtfGraph *g, uint32_t *out_size, uint64_t *out_x_mask);

/**
 * Minimum edge deletions to a bipartite graph (n <= 28).
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum MtfStatus mtf_closeness_to_bipartite(const struct MtfGraph *g, uint32_t *out);

/**
 * Searches for a partition with `G[X]` an induced perfect matching and `Y`
 * independent (n <= 24). Writes whether one exists and, if so, the side
 * masks of the deterministic witness.
 *
 * # Safety
 * `g` must be a live handle; all out-pointers must be valid.
 */
enum MtfStatus mtf_structure_witness(const struct MtfGraph *g,
                                     bool *out_found,
                                     uint64_t *out_x_mask,
                                     uint64_t *out_y_mask);

/**
 * Extends a triangle-free graph to a maximal one by lexicographic greedy
 * addition; the result is a new handle.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum MtfStatus mtf_maximal_completion(const struct MtfGraph *g, struct MtfGraph **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MTF_H */
