#ifndef CONTAGION_H
#define CONTAGION_H

/* Generated by cbindgen from contagion-capi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum ContagionStatus {
  CONTAGION_STATUS_OK = 0,
  CONTAGION_STATUS_NULL_POINTER = 1,
  CONTAGION_STATUS_INVALID_ARGUMENT = 2,
  CONTAGION_STATUS_PARSE_ERROR = 3,
  /**
   * An enumeration would exceed the configured budget.
   */
  CONTAGION_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * `m(G, r)` exceeds the supplied upper bound (not an error: the
   * bounded outcome of a minimum-contagious-set search).
   */
  CONTAGION_STATUS_BOUND_EXCEEDED = 5,
  /**
   * A caller-supplied output buffer is too small.
   */
  CONTAGION_STATUS_BUFFER_TOO_SMALL = 6,
  CONTAGION_STATUS_INTERNAL_ERROR = 7,
} ContagionStatus;

/**
 * How a constructed seed was chosen; mirrors the library's recipe.
 */
typedef enum ContagionSeedMethod {
  CONTAGION_SEED_METHOD_NEIGHBORS_OF_ANCHOR = 0,
  CONTAGION_SEED_METHOD_DC_CROSS_PAIR = 1,
  CONTAGION_SEED_METHOD_ORE_LEMMA17 = 2,
  CONTAGION_SEED_METHOD_BRUTE_FORCE_FALLBACK = 3,
} ContagionSeedMethod;

/**
 * Opaque graph handle.
 */
typedef struct ContagionGraph ContagionGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *contagion_last_error_message(void);

/**
 * Empty graph on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum ContagionStatus contagion_graph_new(uint32_t n, struct ContagionGraph **out);

/**
 * Graph from `edge_count` undirected edges given as `2 * edge_count`
 * endpoints `(u0, v0, u1, v1, ...)`. Rejects self-loops, duplicates and
 * out-of-range ids.
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable `u32`s; `out`
 * must be valid.
 */
enum ContagionStatus contagion_graph_from_edges(uint32_t n,
                                                const uint32_t *endpoints,
                                                size_t edge_count,
                                                struct ContagionGraph **out);

/**
 * Builds a named family from its provenance string, e.g. `"dc n=8"` or
 * `"ore_groups n=12 c=4 sizes=2,2,2,2"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be valid.
 */
enum ContagionStatus contagion_graph_generate(const char *spec, struct ContagionGraph **out);

/**
 * Parses the edge-list document format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid.
 */
enum ContagionStatus contagion_graph_parse(const char *text, struct ContagionGraph **out);

/**
 * Releases a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must be a pointer returned by this library, not yet freed.
 */
void contagion_graph_free(struct ContagionGraph *g);

/**
 * Vertex count; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
uint32_t contagion_graph_vertex_count(const struct ContagionGraph *g);

/**
 * Edge count; 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
uint64_t contagion_graph_edge_count(const struct ContagionGraph *g);

/**
 * Degree of one vertex.
 *
 * # Safety
 * `g` must be a live handle; `out_degree` must be valid.
 */
enum ContagionStatus contagion_graph_degree(const struct ContagionGraph *g,
                                            uint32_t v,
                                            uint32_t *out_degree);

/**
 * Copy of the graph with one extra edge (graphs are immutable).
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum ContagionStatus contagion_graph_with_edge(const struct ContagionGraph *g,
                                               uint32_t u,
                                               uint32_t v,
                                               struct ContagionGraph **out);

/**
 * True iff every non-adjacent pair has degree sum at least n.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum ContagionStatus contagion_graph_is_ore(const struct ContagionGraph *g, bool *out);

/**
 * True iff the graph is two n/2-cliques joined by a perfect matching.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid.
 */
enum ContagionStatus contagion_graph_is_dc(const struct ContagionGraph *g, bool *out);

/**
 * Canonical edge-list document for the graph. Free with
 * [`contagion_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out_text` must be valid.
 */
enum ContagionStatus contagion_graph_emit(const struct ContagionGraph *g, char **out_text);

/**
 * Percolates a seed at threshold `r`; reports contagiousness and the
 * number of rounds the process ran.
 *
 * # Safety
 * `g` must be a live handle; `seed` must point to `seed_len` readable
 * `u32`s; out pointers must be valid or null (nulls are skipped).
 */
enum ContagionStatus contagion_percolate(const struct ContagionGraph *g,
                                         const uint32_t *seed,
                                         size_t seed_len,
                                         uint32_t r,
                                         bool *out_contagious,
                                         uint32_t *out_rounds);

/**
 * Full percolation trace as a JSON document (fields `n`, `r`, `seed`,
 * `waves`, `contagious`, `rounds`). Free with [`contagion_string_free`].
 *
 * # Safety
 * As [`contagion_percolate`]; `out_json` must be valid.
 */
enum ContagionStatus contagion_percolate_json(const struct ContagionGraph *g,
                                              const uint32_t *seed,
                                              size_t seed_len,
                                              uint32_t r,
                                              char **out_json);

/**
 * Writes the closure (eventually infected set) of a seed into
 * `out_members`, which must have capacity for `n` entries.
 *
 * # Safety
 * As [`contagion_percolate`]; `out_members` must have room for `cap`
 * entries.
 */
enum ContagionStatus contagion_closure(const struct ContagionGraph *g,
                                       const uint32_t *seed,
                                       size_t seed_len,
                                       uint32_t r,
                                       uint32_t *out_members,
                                       size_t cap,
                                       size_t *out_len);

/**
 * Exact minimum contagious set. `upper_bound < 0` means unbounded;
 * with a bound, `BOUND_EXCEEDED` reports `m > upper_bound`. `budget`
 * and `workers` of 0 select the defaults. The witness (ascending) is
 * written to `out_witness`.
 *
 * # Safety
 * `g` must be a live handle; `out_witness` must have room for `cap`
 * entries; other out pointers must be valid or null.
 */
enum ContagionStatus contagion_min_contagious(const struct ContagionGraph *g,
                                              uint32_t r,
                                              int64_t upper_bound,
                                              uint64_t budget,
                                              uint32_t workers,
                                              uint32_t *out_m,
                                              uint32_t *out_witness,
                                              size_t cap,
                                              size_t *out_witness_len,
                                              uint64_t *out_seeds_examined);

/**
 * Seed-space statistics at one seed size. `out_max_rounds` is -1 when
 * no seed of this size is contagious; otherwise `out_argmax` (capacity
 * `cap`) receives a seed attaining the maximum.
 *
 * # Safety
 * `g` must be a live handle; out pointers must be valid or null.
 */
enum ContagionStatus contagion_scan_seeds(const struct ContagionGraph *g,
                                          uint32_t r,
                                          size_t size,
                                          uint64_t budget,
                                          uint32_t workers,
                                          uint64_t *out_total,
                                          uint64_t *out_contagious,
                                          int64_t *out_max_rounds,
                                          uint32_t *out_argmax,
                                          size_t cap,
                                          size_t *out_argmax_len);

/**
 * Contagious seed of size k for a graph with minimum degree at least
 * ⌈(k-1)/k · n⌉ (thresholds k). Writes the seed, the method, and the
 * anchor vertex (-1 when the method has none).
 *
 * # Safety
 * `g` must be a live handle; `out_seed` must have room for `cap`
 * entries; other out pointers must be valid or null.
 */
enum ContagionStatus contagion_construct_dense_seed(const struct ContagionGraph *g,
                                                    uint32_t k,
                                                    uint32_t *out_seed,
                                                    size_t cap,
                                                    size_t *out_seed_len,
                                                    enum ContagionSeedMethod *out_method,
                                                    int64_t *out_anchor);

/**
 * Contagious pair for an Ore graph (thresholds two).
 *
 * # Safety
 * As [`contagion_construct_dense_seed`].
 */
enum ContagionStatus contagion_construct_ore_seed(const struct ContagionGraph *g,
                                                  uint32_t *out_seed,
                                                  size_t cap,
                                                  size_t *out_seed_len,
                                                  enum ContagionSeedMethod *out_method,
                                                  int64_t *out_anchor);

/**
 * Frees a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed.
 */
void contagion_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTAGION_H */
