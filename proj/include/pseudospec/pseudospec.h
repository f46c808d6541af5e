/*
 * C interface to the pseudospec library.
 *
 * Every function returns a pspec_status. On failure a description is kept
 * per thread and can be read with pspec_last_error(). Objects are opaque
 * handles released with the matching *_free function. Strings returned
 * through char** are heap allocated and released with pspec_string_free.
 */
#ifndef PSEUDOSPEC_H
#define PSEUDOSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PSPEC_API __declspec(dllexport)
#else
#define PSPEC_API __attribute__((visibility("default")))
#endif

typedef enum pspec_status {
  PSPEC_OK = 0,
  PSPEC_ERR_SPECTRUM = 1,
  PSPEC_ERR_DOMAIN = 2,
  PSPEC_ERR_CONFIG = 3,
  PSPEC_ERR_SINGULAR = 4,
  PSPEC_ERR_CONVERGENCE = 5,
  PSPEC_ERR_ZERO_COUPLING = 6,
  PSPEC_ERR_NO_CONVERGENCE = 7,
  PSPEC_ERR_EIGENVALUE_LOST = 8,
  PSPEC_ERR_IO = 9,
  PSPEC_ERR_INTERNAL = 10
} pspec_status;

typedef struct pspec_complex {
  double re;
  double im;
} pspec_complex;

typedef enum pspec_region {
  PSPEC_REGION_D_PLUS = 0,
  PSPEC_REGION_D_MINUS = 1,
  PSPEC_REGION_U = 2,
  PSPEC_REGION_W = 3,
  PSPEC_REGION_SPECTRUM = 4
} pspec_region;

typedef enum pspec_format { PSPEC_FORMAT_CSV = 0, PSPEC_FORMAT_JSON = 1 } pspec_format;

/* ---- general ---- */

PSPEC_API const char* pspec_version(void);
PSPEC_API const char* pspec_last_error(void);
PSPEC_API const char* pspec_status_name(pspec_status status);
PSPEC_API const char* pspec_region_name(pspec_region region);
PSPEC_API void pspec_string_free(char* s);
/* Shortest round-trip decimal text of x into buf (at least 32 bytes). */
PSPEC_API pspec_status pspec_format_double(double x, char* buf, size_t size);

/* ---- resolvent kernel ---- */

PSPEC_API pspec_status pspec_wave_numbers(pspec_complex z, pspec_complex* k_plus,
                                          pspec_complex* k_minus);
PSPEC_API pspec_status pspec_classify_region(pspec_complex z, double tol_spec,
                                             pspec_region* region);
PSPEC_API pspec_status pspec_resolvent_kernel(pspec_complex z, double x, double y,
                                              pspec_complex* value);
PSPEC_API pspec_status pspec_dirichlet_kernel(pspec_complex z, double x, double y,
                                              pspec_complex* value);

/* ---- resolvent bounds ---- */

enum { PSPEC_BOUND_SCHUR = 1, PSPEC_BOUND_PSEUDOMODE = 2, PSPEC_BOUND_NUMERICAL_RANGE = 4 };

PSPEC_API pspec_status pspec_bound_pair(pspec_complex z, double* lower, double* upper,
                                        unsigned* methods);
PSPEC_API pspec_status pspec_schur_upper_bound(pspec_complex z, double* value);
PSPEC_API pspec_status pspec_pseudomode_lower_bound(pspec_complex z, double* value);
PSPEC_API pspec_status pspec_numrange_bound(pspec_complex z, double* value);
/* ||g0|| / ||(H~ - z) g0|| for the sign potential smoothed on [-a, 0]. */
PSPEC_API pspec_status pspec_regularized_pseudomode_ratio(pspec_complex z, double a,
                                                          double* ratio);

/* ---- potentials ---- */

typedef struct pspec_potential pspec_potential;

PSPEC_API pspec_status pspec_potential_gaussian(pspec_complex amplitude, double width,
                                                pspec_potential** out);
PSPEC_API pspec_status pspec_potential_bump(pspec_complex amplitude, double center,
                                            double radius, pspec_potential** out);
/* Bump of radius r and amplitude alpha / (2 r). */
PSPEC_API pspec_status pspec_potential_delta_like(pspec_complex alpha, double radius,
                                                  pspec_potential** out);
PSPEC_API pspec_status pspec_potential_step(double a, pspec_complex b, pspec_potential** out);
PSPEC_API pspec_status pspec_potential_sampled(const double* x, const pspec_complex* values,
                                               size_t count, pspec_potential** out);
PSPEC_API void pspec_potential_free(pspec_potential* v);
PSPEC_API pspec_status pspec_potential_l1_norm(const pspec_potential* v, double* value);
PSPEC_API pspec_status pspec_potential_describe(const pspec_potential* v, char** text);

/* ---- finite-difference oracle ---- */

typedef enum pspec_fd_kind {
  PSPEC_FD_FREE = 0,
  PSPEC_FD_SIGN = 1,
  PSPEC_FD_SIGN_DIRICHLET_SPLIT = 2,
  PSPEC_FD_STEP = 3,
  PSPEC_FD_SIGN_PLUS = 4,
  PSPEC_FD_SMOOTHED = 5
} pspec_fd_kind;

typedef struct pspec_fd_params {
  pspec_fd_kind kind;
  double a;                          /* step half-width or smoothing length */
  pspec_complex b;                   /* step depth */
  double epsilon;                    /* coupling for PSPEC_FD_SIGN_PLUS */
  const pspec_potential* potential;  /* perturbation for PSPEC_FD_SIGN_PLUS */
  double half_length;
  size_t n;
  int has_center_jump;
  pspec_complex center_jump;
} pspec_fd_params;

typedef struct pspec_fd_operator pspec_fd_operator;

PSPEC_API pspec_status pspec_fd_build(const pspec_fd_params* params, pspec_fd_operator** out);
PSPEC_API void pspec_fd_free(pspec_fd_operator* op);
PSPEC_API pspec_status pspec_fd_size(const pspec_fd_operator* op, size_t* n, double* h);
PSPEC_API pspec_status pspec_fd_resolvent_norm(const pspec_fd_operator* op, pspec_complex z,
                                               int estimate_error, double* value,
                                               double* error_estimate);
PSPEC_API pspec_status pspec_fd_nearest_eigenvalue(const pspec_fd_operator* op,
                                                   pspec_complex shift, pspec_complex* value,
                                                   double* error_estimate);
/* Writes up to capacity eigenvalues; count receives the total number. */
PSPEC_API pspec_status pspec_fd_eigenvalues(const pspec_fd_operator* op, pspec_complex* values,
                                            size_t capacity, size_t* count);

/* ---- pseudospectrum field ---- */

typedef struct pspec_grid {
  double re_min, re_max, im_min, im_max;
  size_t n_re, n_im;
} pspec_grid;

typedef struct pspec_field_point {
  pspec_complex z;
  pspec_region region;
  double lower;
  double upper;
  int has_oracle;
  double oracle;
  pspec_status status;
} pspec_field_point;

typedef struct pspec_field pspec_field;

/* oracle_n == 0 disables the finite-difference column. */
PSPEC_API pspec_status pspec_field_compute(const pspec_grid* grid, size_t oracle_n,
                                           double oracle_half_length, pspec_field** out);
PSPEC_API void pspec_field_free(pspec_field* field);
PSPEC_API pspec_status pspec_field_size(const pspec_field* field, size_t* count);
PSPEC_API pspec_status pspec_field_point_at(const pspec_field* field, size_t index,
                                            pspec_field_point* point);
PSPEC_API pspec_status pspec_field_serialize(const pspec_field* field, pspec_format format,
                                             char** text);
PSPEC_API pspec_status pspec_field_export(const pspec_field* field, const char* path,
                                          pspec_format format);

/* ---- Birman-Schwinger ---- */

typedef struct pspec_search_box {
  double re_min, re_max, im_min, im_max;
} pspec_search_box;

PSPEC_API pspec_status pspec_bs_hs_norm(const pspec_potential* v, pspec_complex z,
                                        double* value);
/* CSV re_z,im_z,hs_norm,l_hs,m_hs for each z. */
PSPEC_API pspec_status pspec_bs_hs_sweep(const pspec_potential* v, const pspec_complex* zs,
                                         size_t count, char** csv);
PSPEC_API pspec_status pspec_bs_detect(const pspec_potential* v, pspec_complex z, double eps,
                                       int* is_eigenvalue, pspec_complex* nearest,
                                       pspec_complex* det);
/* CSV re,im,residual,seed_index; failed seeds are listed in *failures (may be NULL). */
PSPEC_API pspec_status pspec_bs_find_roots(const pspec_potential* v, double eps,
                                           const pspec_search_box* box,
                                           const pspec_complex* seeds, size_t seed_count,
                                           char** csv, char** failures);
/* eigenvalues receives one value per eps (epsilon_count entries). */
PSPEC_API pspec_status pspec_bs_rate(const pspec_potential* v, const double* epsilons,
                                     size_t epsilon_count, double* slope,
                                     pspec_complex* eigenvalues);

/* ---- explicit models ---- */

typedef struct pspec_delta_result {
  pspec_complex alpha;
  pspec_complex lambda;
  int exists;       /* lambda off the rays */
  int bound_state;  /* also k+(lambda) + k-(lambda) = -alpha, jump psi'(0+) - psi'(0-) = alpha psi(0) */
} pspec_delta_result;

PSPEC_API pspec_status pspec_delta_eigenvalue(pspec_complex alpha, pspec_delta_result* out);
PSPEC_API pspec_status pspec_delta_csv(const pspec_complex* alphas, size_t count, char** csv);
/* sigma may be NULL for all eight branches. */
PSPEC_API pspec_status pspec_gamma_csv(const int* sigma, const double* r, size_t count,
                                       char** csv);
PSPEC_API pspec_status pspec_step_residual(pspec_complex lambda, double a, pspec_complex b,
                                           pspec_complex* value);
PSPEC_API pspec_status pspec_step_csv(double a, const double* bs, size_t count,
                                      double lambda_max, char** csv);
PSPEC_API pspec_status pspec_dirichlet_norm(pspec_complex z, double* value);
PSPEC_API pspec_status pspec_dirichlet_uniformity(const pspec_potential* v,
                                                  const pspec_complex* zs, size_t count,
                                                  double* hs_norms, double* max_hs,
                                                  double* slope, int* flagged);

#ifdef __cplusplus
}
#endif

#endif /* PSEUDOSPEC_H */
