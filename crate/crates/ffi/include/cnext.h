#ifndef CNEXT_H
#define CNEXT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Where a 2D query point fell.
typedef enum CnextRegion {
  CNEXT_REGION_INSIDE = 0,
  CNEXT_REGION_TUBE = 1,
  CNEXT_REGION_OUTSIDE = 2,
} CnextRegion;

// Result code of every fallible call.
typedef enum CnextStatus {
  CNEXT_STATUS_OK = 0,
  CNEXT_STATUS_NULL_POINTER = 1,
  CNEXT_STATUS_INVALID_ARGUMENT = 2,
  CNEXT_STATUS_DEGENERATE_NODES = 3,
  CNEXT_STATUS_NODES_NOT_INCREASING = 4,
  CNEXT_STATUS_ILL_CONDITIONED = 5,
  CNEXT_STATUS_DOMAIN = 6,
  CNEXT_STATUS_REACH_EXCEEDED = 7,
  CNEXT_STATUS_UNDEFINED_RATIO = 8,
  CNEXT_STATUS_NOT_RESOLVABLE = 9,
  CNEXT_STATUS_TOLERANCE_TOO_SMALL = 10,
  CNEXT_STATUS_DEGENERATE_PARAMETRIZATION = 11,
  CNEXT_STATUS_SAMPLE_OUTSIDE_DOMAIN = 12,
  CNEXT_STATUS_EMPTY_INPUT = 13,
  CNEXT_STATUS_BUFFER_TOO_SMALL = 14,
  CNEXT_STATUS_PANIC = 15,
} CnextStatus;

// 1D extension setup.
typedef struct CnextExtension1D CnextExtension1D;

// Extension across a closed curve.
typedef struct CnextExtension2D CnextExtension2D;

// Extension weights and nodes.
typedef struct CnextScheme CnextScheme;

// Shrinking map, optionally tabulated.
typedef struct CnextShrinkMap CnextShrinkMap;

// `f(user_data, x)`.
typedef double (*CnextFn1)(void *user_data, double x);

// `f(user_data, x, y)`.
typedef double (*CnextFn2)(void *user_data, double x, double y);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread; empty after a
// successful call. The pointer stays valid until the next call on this thread.
const char *cnext_last_error(void);

// `T_n(1 + 2/a)`, the l1 norm of the optimal weights.
enum CnextStatus cnext_condition_number(size_t n, double a, double *out);

// Optimal scheme of order `n` with nodes on `[0, a]`.
enum CnextStatus cnext_scheme_new_optimal(size_t n, double a, struct CnextScheme **out);

// Scheme on caller-supplied increasing nodes in `[0, a]`.
enum CnextStatus cnext_scheme_new_with_nodes(double a,
                                             const double *nodes,
                                             size_t len,
                                             struct CnextScheme **out);

void cnext_scheme_free(struct CnextScheme *s);

// Order `n`; the scheme has `n + 1` nodes. Returns 0 for a null handle.
size_t cnext_scheme_order(const struct CnextScheme *s);

// l1 norm of the weights. NaN for a null handle.
double cnext_scheme_cond(const struct CnextScheme *s);

// Copies the `order + 1` nodes into `dst`.
enum CnextStatus cnext_scheme_nodes(const struct CnextScheme *s, double *dst, size_t len);

// Copies the `order + 1` weights into `dst`.
enum CnextStatus cnext_scheme_weights(const struct CnextScheme *s, double *dst, size_t len);

// Shrinking map `psi` with parameter `delta` and order `n`. A positive
// `tol` builds a piecewise-Chebyshev table accurate to `tol`; otherwise
// every evaluation runs the root finder.
enum CnextStatus cnext_shrink_new(double delta, size_t n, double tol, struct CnextShrinkMap **out);

void cnext_shrink_free(struct CnextShrinkMap *m);

// `psi(x)` for `x` in `[0, 1]`.
enum CnextStatus cnext_shrink_psi(const struct CnextShrinkMap *m, double x, double *out);

// Benchmark setup: source `[0, 0.5]`, extension `[-0.25, 0]` with the
// standard windows. `shrink_delta <= 0` means no shrinking map.
enum CnextStatus cnext_ext1d_new_benchmark(size_t n,
                                           double a,
                                           double shrink_delta,
                                           struct CnextExtension1D **out);

// Windowless extension from `[0, source_len]` to `[-extension_len, 0]`.
// The scheme is copied; the caller keeps ownership of `scheme`.
enum CnextStatus cnext_ext1d_new(const struct CnextScheme *scheme,
                                 double source_len,
                                 double extension_len,
                                 struct CnextExtension1D **out);

void cnext_ext1d_free(struct CnextExtension1D *e);

// Extended value at `x` in `[-extension_len, 0]`.
enum CnextStatus cnext_ext1d_eval(const struct CnextExtension1D *e,
                                  CnextFn1 f,
                                  void *user_data,
                                  double x,
                                  double *out);

// `max |E f| / max |f|` over uniform probes (at least 1000).
enum CnextStatus cnext_ext1d_kappa(const struct CnextExtension1D *e,
                                   CnextFn1 f,
                                   void *user_data,
                                   size_t probes,
                                   double *out);

// Number of adaptive Chebyshev panels of the extended profile on
// `[-extension_len, source_len]`, with `k` coefficients per panel and tail
// tolerance `tol` relative to the profile's maximum.
enum CnextStatus cnext_ext1d_chunks(const struct CnextExtension1D *e,
                                    CnextFn1 f,
                                    void *user_data,
                                    size_t k,
                                    double tol,
                                    size_t *out);

// Extension across a circle. `reach <= 0` selects `0.5 / max curvature`.
enum CnextStatus cnext_ext2d_new_circle(double cx,
                                        double cy,
                                        double radius,
                                        size_t n,
                                        double a,
                                        double reach,
                                        struct CnextExtension2D **out);

// Extension across an axis-aligned ellipse.
enum CnextStatus cnext_ext2d_new_ellipse(double cx,
                                         double cy,
                                         double semi_x,
                                         double semi_y,
                                         size_t n,
                                         double a,
                                         double reach,
                                         struct CnextExtension2D **out);

// Extension across the star `r = radius (1 + amplitude cos(lobes theta))`.
enum CnextStatus cnext_ext2d_new_star(double cx,
                                      double cy,
                                      double radius,
                                      double amplitude,
                                      uint32_t lobes,
                                      size_t n,
                                      double a,
                                      double reach,
                                      struct CnextExtension2D **out);

// Extension across the trigonometric interpolant of `len` boundary points
// (`xs[i]`, `ys[i]`), uniformly spaced in parameter; `len` must be a power
// of two and at least 8.
enum CnextStatus cnext_ext2d_new_samples(const double *xs,
                                         const double *ys,
                                         size_t len,
                                         size_t n,
                                         double a,
                                         double reach,
                                         struct CnextExtension2D **out);

void cnext_ext2d_free(struct CnextExtension2D *e);

// Tube half-width. NaN for a null handle.
double cnext_ext2d_reach(const struct CnextExtension2D *e);

// Extended field at `(x, y)`: `f` inside the curve, the normal extension in
// the tube, zero beyond it. `region` may be null.
enum CnextStatus cnext_ext2d_eval(const struct CnextExtension2D *e,
                                  CnextFn2 f,
                                  void *user_data,
                                  double x,
                                  double y,
                                  double *out,
                                  enum CnextRegion *region);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CNEXT_H */
