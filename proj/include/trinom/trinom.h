/*
 * C interface to the trinomial stability library.
 *
 * Every entry point returns a trinom_status; on failure a human readable
 * message is available from trinom_last_error() on the calling thread.
 * Objects are opaque handles created by *_create / producer functions and
 * released with the matching *_destroy. A NULL trinom_context means default
 * tolerances. All functions are safe to call concurrently on distinct
 * handles; a context may be shared read-only between threads.
 */
#ifndef TRINOM_TRINOM_H
#define TRINOM_TRINOM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TRINOM_BUILDING_LIBRARY)
#    define TRINOM_API __declspec(dllexport)
#  else
#    define TRINOM_API __declspec(dllimport)
#  endif
#else
#  define TRINOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trinom_status {
    TRINOM_OK = 0,
    TRINOM_E_INVALID_ARGUMENT = 1,
    TRINOM_E_DEGENERATE_COEFFICIENT = 2,
    TRINOM_E_ALL_COEFFICIENTS_ZERO = 3,
    TRINOM_E_ZERO_COEFFICIENT = 4,
    TRINOM_E_ZERO_ARGUMENT = 5,
    TRINOM_E_ZERO_SIDE = 6,
    TRINOM_E_NOT_A_TRIANGLE = 7,
    TRINOM_E_ZERO_V = 8,
    TRINOM_E_PRECONDITION = 9,
    TRINOM_E_INVALID_PARAMETERS = 10,
    TRINOM_E_NOT_IN_PROJECTION = 11,
    TRINOM_E_NOT_CONVERGED = 12,
    TRINOM_E_DEGENERATE_TRAJECTORY = 13,
    TRINOM_E_IO = 14,
    TRINOM_E_OUT_OF_MEMORY = 15,
    TRINOM_E_INTERNAL = 16
} trinom_status;

typedef struct trinom_complex {
    double re;
    double im;
} trinom_complex;

typedef enum trinom_region {
    TRINOM_REGION_COHN = 0,
    TRINOM_REGION_GAMMA = 1,
    TRINOM_REGION_DELTA = 2,
    TRINOM_REGION_OUTSIDE = 3
} trinom_region;

typedef enum trinom_certificate_kind {
    TRINOM_CERT_DEGENERATE_TABLE = 0,
    TRINOM_CERT_CONSTANT_TERM_BOUND = 1,
    TRINOM_CERT_COHN_MEMBERSHIP = 2,
    TRINOM_CERT_BOHL_COUNT = 3,
    TRINOM_CERT_PARAMETRIZATION = 4
} trinom_certificate_kind;

typedef enum trinom_cell_tag {
    TRINOM_CELL_COHN = 0,
    TRINOM_CELL_GAMMA = 1,
    TRINOM_CELL_DELTA = 2,
    TRINOM_CELL_OUTSIDE = 3,
    TRINOM_CELL_MARGINAL = 4
} trinom_cell_tag;

typedef enum trinom_triangle {
    TRINOM_TRIANGLE = 0,
    TRINOM_TRIANGLE_DEGENERATE = 1,
    TRINOM_TRIANGLE_NONE_C_DOMINATES = 2,
    TRINOM_TRIANGLE_NONE_B_DOMINATES = 3,
    TRINOM_TRIANGLE_NONE_A_DOMINATES = 4
} trinom_triangle;

/* Stability verdict with its certificate. Optional members come with a
 * has_* flag. n, m and reduction describe the gcd-reduced trinomial. */
typedef struct trinom_verdict {
    int stable;
    int marginal;
    int n;
    int m;
    int reduction;
    trinom_certificate_kind certificate;
    trinom_region region;
    int has_omega;
    double omega;
    int has_parameters;
    double x, y, s, t;
    int has_t_bound;
    double t_bound;
    int has_interval;
    double pivot;
    double half_width;
    long long count;
} trinom_verdict;

typedef struct trinom_disc_count {
    long long count;
    int marginal;
    trinom_triangle triangle;
    int exceptional;
    int has_interval;
    double pivot;
    double half_width;
} trinom_disc_count;

typedef struct trinom_oracle_tally {
    long long count;
    long long margin_count;
    double max_modulus;
} trinom_oracle_tally;

typedef struct trinom_parameters {
    int n;
    int m;
    int reduction;
    double x, y, s, t;
    trinom_region region;
    int has_omega;
    double omega;
    int has_t_bound;
    double t_bound;
    int within_bound;
    int marginal;
} trinom_parameters;

typedef struct trinom_context trinom_context;
typedef struct trinom_raster trinom_raster;
typedef struct trinom_trajectory trinom_trajectory;

TRINOM_API const char* trinom_version(void);
TRINOM_API const char* trinom_status_string(trinom_status status);
TRINOM_API const char* trinom_last_error(void);

/* Tolerance context. Keys: tau_int, tau_tri, tau_res, tau_region, root_margin. */
TRINOM_API trinom_status trinom_context_create(trinom_context** out);
TRINOM_API void trinom_context_destroy(trinom_context* ctx);
TRINOM_API trinom_status trinom_context_set(trinom_context* ctx, const char* key, double value);
TRINOM_API trinom_status trinom_context_get(const trinom_context* ctx, const char* key, double* value);
/* Reads a key=value file; '#' starts a comment. */
TRINOM_API trinom_status trinom_context_load(trinom_context* ctx, const char* path);

/* Schur stability of a z^n + b z^m + c through the region parametrization. */
TRINOM_API trinom_status trinom_check(const trinom_context* ctx, int n, int m, trinom_complex a,
                                      trinom_complex b, trinom_complex c, trinom_verdict* out);
/* Same decision through the root count in the unit disc. */
TRINOM_API trinom_status trinom_check_by_count(const trinom_context* ctx, int n, int m,
                                               trinom_complex a, trinom_complex b,
                                               trinom_complex c, trinom_verdict* out);

/* Roots in |z| < r without computing roots. a, b, c must be nonzero. */
TRINOM_API trinom_status trinom_count_roots(const trinom_context* ctx, int n, int m,
                                            trinom_complex a, trinom_complex b, trinom_complex c,
                                            double r, trinom_disc_count* out);

/* Root-finding cross-check: roots in |z| < r and roots near the circle. */
TRINOM_API trinom_status trinom_oracle_count(const trinom_context* ctx, int n, int m,
                                             trinom_complex a, trinom_complex b, trinom_complex c,
                                             double r, trinom_oracle_tally* out);
TRINOM_API trinom_status trinom_oracle_stable(const trinom_context* ctx, int n, int m,
                                              trinom_complex a, trinom_complex b,
                                              trinom_complex c, int* stable, int* marginal,
                                              double* max_modulus);

/* (x, y, s, t) parameters of the normalized trinomial with its |t| bound. */
TRINOM_API trinom_status trinom_decompose(const trinom_context* ctx, int n, int m,
                                          trinom_complex a, trinom_complex b, trinom_complex c,
                                          trinom_parameters* out);
/* b = x e^{it} e^{-i(n-m)s}, c = y e^{-ins}; requires gcd(n, m) = 1. */
TRINOM_API trinom_status trinom_compose(int n, int m, double x, double y, double s, double t,
                                        trinom_complex* b, trinom_complex* c);

/* Region raster over [umin, umax] x [vmin, vmax]; threads == 0 uses all cores. */
TRINOM_API trinom_status trinom_region_rasterize(const trinom_context* ctx, int n, int m,
                                                 double umin, double umax, double vmin,
                                                 double vmax, int width, int height,
                                                 unsigned threads, trinom_raster** out);
TRINOM_API void trinom_raster_destroy(trinom_raster* raster);
TRINOM_API trinom_status trinom_raster_size(const trinom_raster* raster, int* width, int* height);
TRINOM_API trinom_status trinom_raster_cell(const trinom_raster* raster, int row, int col,
                                            trinom_cell_tag* tag, double* u, double* v);
TRINOM_API trinom_status trinom_raster_count(const trinom_raster* raster, trinom_cell_tag tag,
                                             size_t* count);
TRINOM_API trinom_status trinom_raster_write_ppm(const trinom_raster* raster, const char* path);
TRINOM_API trinom_status trinom_raster_write_csv(const trinom_raster* raster, const char* path);

/* X(t) = -b X(t-(n-m)) - c X(t-n) seeded with `initial_len` == n values. */
TRINOM_API trinom_status trinom_simulate(int n, int m, trinom_complex b, trinom_complex c,
                                         const trinom_complex* initial, size_t initial_len,
                                         size_t horizon, trinom_trajectory** out);
/* Horizon long enough for the slowest root of z^n + b z^m + c to settle. */
TRINOM_API trinom_status trinom_default_horizon(const trinom_context* ctx, int n, int m,
                                                trinom_complex b, trinom_complex c,
                                                size_t* horizon);
TRINOM_API void trinom_trajectory_destroy(trinom_trajectory* trajectory);
TRINOM_API trinom_status trinom_trajectory_length(const trinom_trajectory* trajectory, size_t* length);
TRINOM_API trinom_status trinom_trajectory_value(const trinom_trajectory* trajectory, size_t index,
                                                 trinom_complex* value);
TRINOM_API trinom_status trinom_trajectory_divergent(const trinom_trajectory* trajectory, int* divergent);
TRINOM_API trinom_status trinom_trajectory_decay_rate(const trinom_trajectory* trajectory, int n,
                                                      double* rate);
TRINOM_API trinom_status trinom_trajectory_write_csv(const trinom_trajectory* trajectory,
                                                     const char* path);

#ifdef __cplusplus
}
#endif

#endif /* TRINOM_TRINOM_H */
