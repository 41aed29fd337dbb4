#ifndef COADJOINT_H
#define COADJOINT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CoadjStatus {
  COADJ_STATUS_OK = 0,
  COADJ_STATUS_NULL_POINTER = 1,
  /**
   * A string argument is not valid UTF-8 or a kind is out of range.
   */
  COADJ_STATUS_INVALID_ARGUMENT = 2,
  COADJ_STATUS_CAPACITY = 3,
  COADJ_STATUS_INVALID_EDGE = 4,
  COADJ_STATUS_PARSE = 5,
  COADJ_STATUS_UNKNOWN_GRAPH = 6,
  COADJ_STATUS_DOMAIN = 7,
  COADJ_STATUS_NUMERIC = 8,
  COADJ_STATUS_CONSISTENCY = 9,
  COADJ_STATUS_BUFFER_TOO_SMALL = 10,
  /**
   * The value does not fit the requested integer type.
   */
  COADJ_STATUS_OVERFLOW = 11,
  COADJ_STATUS_PANIC = 12,
} CoadjStatus;

typedef enum CoadjKind {
  COADJ_KIND_MATCHING = 0,
  COADJ_KIND_CHROMATIC = 1,
  COADJ_KIND_ADJOINT = 2,
  COADJ_KIND_CO_ADJOINT = 3,
} CoadjKind;

/**
 * A simple graph on at most 32 vertices.
 */
typedef struct CoadjGraph CoadjGraph;

/**
 * A polynomial with arbitrary-precision integer coefficients.
 */
typedef struct CoadjPoly CoadjPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *coadj_last_error_message(void);

/**
 * Parses one graph6 line.
 *
 * # Safety
 * `line` must be NUL-terminated; `out` must be writable.
 */
enum CoadjStatus coadj_graph_from_graph6(const char *line, struct CoadjGraph **out);

/**
 * Builds `K<n>`, `K<m>,<n>`, `P<n>`, `C<n>` or `E<n>`.
 *
 * # Safety
 * `name` must be NUL-terminated; `out` must be writable.
 */
enum CoadjStatus coadj_graph_from_name(const char *name, struct CoadjGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored as
 * `pairs[2i], pairs[2i+1]`.
 *
 * # Safety
 * `pairs` must point to `2 * edge_count` values (may be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum CoadjStatus coadj_graph_from_edges(size_t n,
                                        const uint32_t *pairs,
                                        size_t edge_count,
                                        struct CoadjGraph **out);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t coadj_graph_vertex_count(const struct CoadjGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t coadj_graph_edge_count(const struct CoadjGraph *g);

/**
 * Writes the graph6 encoding and a terminating NUL into `buf`. `needed`
 * (if not NULL) receives the required size including the NUL; when
 * `capacity` is smaller nothing is written and BufferTooSmall is returned.
 *
 * # Safety
 * `buf` must have room for `capacity` bytes; `needed` may be NULL.
 */
enum CoadjStatus coadj_graph_to_graph6(const struct CoadjGraph *g,
                                       char *buf,
                                       size_t capacity,
                                       size_t *needed);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void coadj_graph_free(struct CoadjGraph *g);

/**
 * Family polynomial of `g` by the edge recursion; `kind` is a
 * `CoadjKind` value.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_family_poly(const struct CoadjGraph *g,
                                   uint32_t kind,
                                   struct CoadjPoly **out);

/**
 * Co-adjoint polynomial read off the Tutte polynomial.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_coadjoint_via_tutte(const struct CoadjGraph *g, struct CoadjPoly **out);

/**
 * Degree, or -1 for the zero polynomial or a NULL handle.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
int64_t coadj_poly_degree(const struct CoadjPoly *p);

/**
 * Coefficient of `x^k`; Overflow if it does not fit in 64 bits.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_poly_coeff_i64(const struct CoadjPoly *p, size_t k, int64_t *out);

/**
 * Coefficient of `x^k` as a decimal string.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_poly_coeff_string(const struct CoadjPoly *p, size_t k, char **out);

/**
 * Text form such as `x^4-6x^3+7x^2-2x`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_poly_to_string(const struct CoadjPoly *p, char **out);

/**
 * # Safety
 * `p` must be NULL or a handle not yet freed.
 */
void coadj_poly_free(struct CoadjPoly *p);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void coadj_string_free(char *s);

/**
 * `T(g; x, y)` as a decimal string.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CoadjStatus coadj_tutte_eval(const struct CoadjGraph *g, int64_t x, int64_t y, char **out);

/**
 * Minimum of `(a + e^a) / ln(1 + a e^{-a})` over `a > 0`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CoadjStatus coadj_sokal_constant(double tolerance, double *out);

/**
 * Writes `E_0..E_max_n` to `out`, which must hold `max_n + 1` values.
 *
 * # Safety
 * `out` must have room for `capacity` values.
 */
enum CoadjStatus coadj_zigzag(size_t max_n, uint64_t *out, size_t capacity);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COADJOINT_H */
