/* siegel.h - C interface to the cubic Siegel-pair dynamics library.
 *
 * The library studies the one-parameter cubic family
 *
 *     f_alpha(z) = (lambda/alpha + alpha + 2) z^3
 *                - (lambda/alpha + 2 alpha + 3) z^2 + alpha z + 1,
 *
 * lambda = exp(2 pi i theta), which carries a 2-cycle of Siegel disks
 * centered at 0 and 1.  All objects are exposed through opaque handles;
 * every fallible call returns an sgl_status and leaves a thread-local
 * message retrievable via sgl_last_error().
 */
#ifndef SIEGEL_H
#define SIEGEL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SGL_API __declspec(dllexport)
#else
#define SGL_API __attribute__((visibility("default")))
#endif

typedef struct {
  double re;
  double im;
} sgl_complex;

typedef enum {
  SGL_OK = 0,
  SGL_ERR_INVALID_ARGUMENT = 1,
  SGL_ERR_DEGENERATE_PARAMETER = 2,
  SGL_ERR_NO_CONVERGENCE = 3,
  SGL_ERR_NOT_ON_BOUNDARY = 4,
  SGL_ERR_DEGENERATE_SAMPLE = 5,
  SGL_ERR_NO_MATCH = 6,
  SGL_ERR_BRANCH_JUMP = 7,
  SGL_ERR_NO_COMMON_LANDING = 8,
  SGL_ERR_ATTRACTING_FIXED_POINT = 9,
  SGL_ERR_CONTINUATION_STALLED = 10,
  SGL_ERR_ILLEGAL_LABEL = 11,
  SGL_ERR_ILLEGAL_CHAIN = 12,
  SGL_ERR_UNKNOWN_ANGLE = 13,
  SGL_ERR_AMBIGUOUS_ROOT = 14,
  SGL_ERR_BUFFER_TOO_SMALL = 15,
  SGL_ERR_IO = 16,
  SGL_ERR_INTERNAL = 17
} sgl_status;

SGL_API const char *sgl_status_name(sgl_status s);
SGL_API const char *sgl_last_error(void);
SGL_API const char *sgl_version(void);

/* ---------------------------------------------------------------- theta */

typedef struct sgl_theta sgl_theta;

/* Golden mean [0;1,1,1,...] truncated at `depth` partial quotients. */
SGL_API sgl_status sgl_theta_create_golden(int depth, sgl_theta **out);
/* Continued fraction [0;cf[0],cf[1],...]; all entries >= 1. */
SGL_API sgl_status sgl_theta_create_cf(const int *cf, int n, sgl_theta **out);
SGL_API void sgl_theta_destroy(sgl_theta *t);
SGL_API double sgl_theta_value(const sgl_theta *t);
SGL_API sgl_complex sgl_theta_lambda(const sgl_theta *t);
SGL_API int sgl_theta_bound(const sgl_theta *t);

/* --------------------------------------------------------------- family */

typedef struct sgl_family sgl_family;

SGL_API sgl_status sgl_family_create(const sgl_theta *t, sgl_complex alpha,
                                     sgl_family **out);
SGL_API void sgl_family_destroy(sgl_family *f);
SGL_API sgl_complex sgl_family_alpha(const sgl_family *f);
/* Monomial coefficients of f(z) = a z^3 + b z^2 + c z + 1. */
SGL_API void sgl_family_coefficients(const sgl_family *f, sgl_complex *a,
                                     sgl_complex *b, sgl_complex *c);
SGL_API sgl_complex sgl_family_eval(const sgl_family *f, sgl_complex z);
SGL_API sgl_complex sgl_family_deriv(const sgl_family *f, sgl_complex z);
/* c0 carries the "-" branch of the critical-point formula, c1 the "+". */
SGL_API void sgl_family_critical_points(const sgl_family *f, sgl_complex *c0,
                                        sgl_complex *c1);
SGL_API double sgl_family_escape_radius(const sgl_family *f);

SGL_API sgl_status sgl_conjugate_parameter(const sgl_theta *t,
                                           sgl_complex alpha,
                                           sgl_complex *out);

typedef struct {
  sgl_complex alpha0, alpha0_tilde;   /* punctures, roots of a^2+2a+lambda */
  sgl_complex alpha4, alpha5;         /* double-critical, |.| > 1 */
  sgl_complex alpha4_tilde, alpha5_tilde;
  sgl_complex alpha_star, alpha_star_tilde; /* fixed points of a -> lambda/a */
} sgl_special_params;

SGL_API sgl_status sgl_special_parameters(const sgl_theta *t,
                                          sgl_special_params *out);

/* -------------------------------------------------------------- algebra */

/* Coefficients are ascending degree; a polynomial of degree d fills d+1
 * slots.  The degree-8 locus polynomial fills exactly 9. */
SGL_API sgl_status sgl_degree8_from_substitution(const sgl_theta *t,
                                                 sgl_complex coeffs[9]);
SGL_API sgl_status sgl_degree8_paper_coefficients(const sgl_theta *t,
                                                  sgl_complex coeffs[9]);

/* All complex roots of the polynomial with the given ascending
 * coefficients (degree = n-1 >= 1).  roots/residuals hold n-1 entries. */
SGL_API sgl_status sgl_poly_roots(const sgl_complex *coeffs, int n,
                                  sgl_complex *roots, double *residuals);

typedef struct {
  sgl_complex alpha;
  double residual;
  int maps_c0_to_c1;      /* branch-labelled critical points */
  int maps_c1_to_c0;
  int conjugate_index;    /* index of lambda/alpha in the root list */
  double pair_distance;
} sgl_degree8_root;

SGL_API sgl_status sgl_classify_degree8_roots(const sgl_theta *t,
                                              sgl_degree8_root out[8]);

/* ------------------------------------------------------------- dynamics */

typedef enum {
  SGL_ORBIT_ESCAPING = 0,
  SGL_ORBIT_ATTRACTED = 1,
  SGL_ORBIT_CAPTURED = 2,
  SGL_ORBIT_BOUNDARY_LIKE = 3,
  SGL_ORBIT_UNRESOLVED = 4
} sgl_orbit_kind;

typedef enum { SGL_DISK_DELTA0 = 0, SGL_DISK_DELTA1 = 1 } sgl_disk;

typedef struct {
  long max_iter;   /* forward f-steps; <= 0 picks the default */
  long tail;       /* tail sample size for recurrence statistics */
} sgl_orbit_budget;

typedef struct {
  sgl_orbit_kind kind;
  long iterations_used;
  long first_exit;          /* Escaping */
  int period;               /* Attracted */
  sgl_complex cycle_point;  /* Attracted */
  double multiplier_mod;    /* Attracted */
  long entry_iter;          /* Captured, in f-steps */
  sgl_disk disk;            /* Captured / BoundaryLike */
  double min_tail_distance; /* distance of orbit to the critical point */
  double tail_diameter;
  double recurrence_eps;
  double escape_radius;
} sgl_orbit_verdict;

SGL_API sgl_status sgl_classify_orbit(const sgl_family *f, int which_crit,
                                      const sgl_orbit_budget *budget,
                                      sgl_orbit_verdict *out);

/* ----------------------------------------------------- boundary samples */

typedef struct sgl_path sgl_path;   /* ordered complex point list */

SGL_API size_t sgl_path_size(const sgl_path *p);
SGL_API sgl_complex sgl_path_point(const sgl_path *p, size_t i);
/* Copies min(sgl_path_size, cap) points into xy pairs; returns count. */
SGL_API size_t sgl_path_copy(const sgl_path *p, double *xy, size_t cap);
SGL_API int sgl_path_closed(const sgl_path *p);
SGL_API void sgl_path_destroy(sgl_path *p);

/* Orbit sample of the Siegel boundary for `disk`; point k has internal
 * angle frac(k*theta).  Fails with NOT_ON_BOUNDARY when the anchoring
 * critical point is not recurrent. */
SGL_API sgl_status sgl_siegel_boundary(const sgl_family *f, sgl_disk disk,
                                       long n_points, sgl_path **out);

SGL_API sgl_status sgl_rotation_number_estimate(const sgl_path *sample,
                                                double *estimate,
                                                double *confidence);

typedef enum {
  SGL_CASE_GAMMA_CURVE = 0,
  SGL_CASE_GAMMA0 = 1,
  SGL_CASE_GAMMA1 = 2
} sgl_locus_case;

typedef struct {
  double radians;        /* in [0, 2 pi) */
  long matched_iterate;
  double match_distance;
  double precision;      /* angular resolution of the estimate */
} sgl_conformal_angle;

SGL_API sgl_status sgl_conformal_angle(const sgl_family *f,
                                       sgl_locus_case which, long n_sample,
                                       sgl_conformal_angle *out);

SGL_API sgl_status sgl_hausdorff_boundary_distance(const sgl_family *f1,
                                                   const sgl_family *f2,
                                                   sgl_disk disk, long n,
                                                   double *out);

typedef enum {
  SGL_TRACE_GAMMA_CURVE = 0,
  SGL_TRACE_GAMMA1_ARC = 1
} sgl_locus_kind;

/* Predictor-corrector trace of the locus.  Gamma closes into a loop;
 * the Gamma^1 arc runs from alpha4 to alpha5. */
SGL_API sgl_status sgl_trace_locus(const sgl_theta *t, sgl_locus_kind which,
                                   long n_boundary_sample, sgl_path **out);

/* ----------------------------------------------------------------- rays */

SGL_API sgl_status sgl_boettcher_scale(const sgl_family *f, sgl_complex *out);

typedef enum {
  SGL_RAY_LANDED = 0,
  SGL_RAY_STALLED = 1,
  SGL_RAY_ESCAPED = 2
} sgl_ray_state;

typedef struct {
  sgl_ray_state state;
  sgl_complex landing_point;
  double landing_residual;  /* |f^2(p) - p| at the landing point */
  long steps;
} sgl_ray_result;

/* External ray of angle num/den (reduced, den | 3^k*(3^2-1) family).
 * The traced polyline runs from large modulus inward. */
SGL_API sgl_status sgl_trace_ray(const sgl_family *f, long num, long den,
                                 int depth, sgl_path **points,
                                 sgl_ray_result *result);

typedef struct {
  sgl_complex p1, p2, p3;
  sgl_complex m1, m2, m3;   /* multipliers f'(p_i) */
} sgl_fixed_points;

SGL_API sgl_status sgl_locate_p3(const sgl_family *f, sgl_fixed_points *out);

typedef enum {
  SGL_PATTERN_CURVE = 0,  /* rays 1/4, 3/4 co-land at P3 */
  SGL_PATTERN_ARC1 = 1,   /* rays 1/8, 3/8 */
  SGL_PATTERN_ARC0 = 2    /* rays 5/8, 7/8 */
} sgl_ray_pattern;

SGL_API sgl_status sgl_ray_pattern_classify(const sgl_family *f,
                                            sgl_ray_pattern *out);

/* --------------------------------------------------------- label algebra */

/* Words use an ASCII form: family letter U/V/W/X, then optional lower and
 * upper index lists, e.g. "U", "U_0^1", "X_1,1^2,0".  A leading '~' marks
 * the cluster C1 ("~U_0^1"). */

typedef enum { SGL_REGIME_CURVE = 0, SGL_REGIME_ARC = 1 } sgl_label_regime;
typedef enum {
  SGL_CHAIN_RED = 0,
  SGL_CHAIN_GREEN = 1,
  SGL_CHAIN_PURPLE = 2
} sgl_chain_color;
typedef enum { SGL_CLUSTER_C0 = 0, SGL_CLUSTER_C1 = 1 } sgl_cluster;

SGL_API sgl_status sgl_apply_f2(const char *word, sgl_label_regime regime,
                                char *buf, size_t buflen);

/* k-th word of a convergent Fatou chain; degenerate_m = -1 for the
 * non-degenerate chain. */
SGL_API sgl_status sgl_chain_word(sgl_chain_color color, sgl_cluster cluster,
                                  sgl_label_regime regime, int degenerate_m,
                                  int k, char *buf, size_t buflen);

typedef enum {
  SGL_CONNECT_SYMMETRIC = 0,
  SGL_CONNECT_ASYMMETRIC = 1,
  SGL_CONNECT_ASYMMETRIC_CONJ = 2
} sgl_connecting;

SGL_API sgl_status sgl_chain_pairing(sgl_connecting c, sgl_chain_color *on_c0,
                                     sgl_chain_color *on_c1);

typedef enum {
  SGL_SWAP12_CURVE = 0,
  SGL_SWAP01_ARC_AT_DEPTH = 1
} sgl_relabel_kind;

SGL_API sgl_status sgl_relabel(const char *word, sgl_relabel_kind kind, int m,
                               char *buf, size_t buflen);

/* Canonical address of a complementary region of the ray partition from
 * its boundary angles ("1/12,1/4,3/4,11/12"). */
SGL_API sgl_status sgl_cluster_address(const char *angles_csv,
                                       sgl_label_regime regime, int depth,
                                       char *buf, size_t buflen);

/* --------------------------------------------------------------- render */

typedef struct sgl_render sgl_render;

SGL_API sgl_status sgl_render_create(sgl_render **out);
SGL_API void sgl_render_destroy(sgl_render *r);
/* Dotted configuration keys, e.g. "window.width", "resolution.w",
 * "budgets.max_iter", "overlays", "alpha", "theta.depth". */
SGL_API sgl_status sgl_render_set(sgl_render *r, const char *key,
                                  const char *value);
/* Writes <basename>.ppm and <basename>.manifest. */
SGL_API sgl_status sgl_render_parameter_plane(sgl_render *r,
                                              const char *basename);
SGL_API sgl_status sgl_render_dynamical_plane(sgl_render *r,
                                              const char *basename);

/* Root report (degree-8 analysis + special parameters) written to `path`,
 * or to stdout when path is NULL. */
SGL_API sgl_status sgl_report_roots(const sgl_theta *t, const char *path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIEGEL_H */
