/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "pseudospec/pseudospec.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,     \
              __LINE__, #cond);                                        \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void test_kernel(void) {
  pspec_complex z = {-1.0, 0.5};
  pspec_complex kp, km, v;
  pspec_region region;
  EXPECT(pspec_wave_numbers(z, &kp, &km) == PSPEC_OK);
  EXPECT(fabs(kp.re - 1.0290855136357461) < 1e-13);
  EXPECT(fabs(km.im + 0.63355174916181655) < 1e-13);
  z.re = -1.0;
  z.im = 0.0;
  EXPECT(pspec_resolvent_kernel(z, 1.0, -1.0, &v) == PSPEC_OK);
  EXPECT(fabs(v.re - 0.050558276864586481) < 1e-14);
  z.re = 3.0;
  z.im = 1.0;
  EXPECT(pspec_resolvent_kernel(z, 0.0, 0.0, &v) == PSPEC_ERR_SPECTRUM);
  EXPECT(strlen(pspec_last_error()) > 0);
  EXPECT(pspec_classify_region(z, 1e-12, &region) == PSPEC_OK);
  EXPECT(region == PSPEC_REGION_SPECTRUM);
  EXPECT(strcmp(pspec_region_name(PSPEC_REGION_W), "W") == 0);
  EXPECT(strcmp(pspec_status_name(PSPEC_ERR_CONFIG), "ConfigError") == 0);
}

static void test_bounds(void) {
  pspec_complex z = {100.0, 0.0};
  double lower = 0.0, upper = 0.0, ratio = 0.0;
  unsigned methods = 0;
  EXPECT(pspec_bound_pair(z, &lower, &upper, &methods) == PSPEC_OK);
  EXPECT(lower > 90.0 && upper < 460.0 && lower < upper);
  EXPECT((methods & PSPEC_BOUND_PSEUDOMODE) != 0);
  EXPECT(pspec_regularized_pseudomode_ratio(z, 1.0, &ratio) == PSPEC_OK);
  EXPECT(ratio > 1.0);
  z.re = -5.0;
  EXPECT(pspec_regularized_pseudomode_ratio(z, 1.0, &ratio) == PSPEC_ERR_DOMAIN);
}

static void test_fd(void) {
  pspec_fd_params p;
  pspec_fd_operator* op = NULL;
  pspec_complex shift = {-0.7, 0.0}, ev;
  double err = 0.0, value = 0.0, h = 0.0;
  size_t n = 0;
  memset(&p, 0, sizeof p);
  p.kind = PSPEC_FD_SIGN;
  p.half_length = 20.0;
  p.n = 20000;
  p.has_center_jump = 1;
  p.center_jump.re = -2.0;
  EXPECT(pspec_fd_build(&p, &op) == PSPEC_OK);
  EXPECT(pspec_fd_size(op, &n, &h) == PSPEC_OK);
  EXPECT(n == 20001);
  EXPECT(pspec_fd_nearest_eigenvalue(op, shift, &ev, &err) == PSPEC_OK);
  EXPECT(fabs(ev.re + 0.75) < 1e-5 && fabs(ev.im) < 1e-8);
  shift.re = -1.0;
  shift.im = 2.0;
  EXPECT(pspec_fd_resolvent_norm(op, shift, 0, &value, NULL) == PSPEC_OK);
  EXPECT(value > 0.0);
  pspec_fd_free(op);

  p.half_length = -1.0;
  op = NULL;
  EXPECT(pspec_fd_build(&p, &op) == PSPEC_ERR_CONFIG);
  EXPECT(op == NULL);
  EXPECT(pspec_fd_build(NULL, &op) == PSPEC_ERR_CONFIG);
}

static void test_field(void) {
  pspec_grid grid = {0.0, 10.0, -2.0, 2.0, 3, 5};
  pspec_field* field = NULL;
  pspec_field_point point;
  size_t count = 0;
  char* csv = NULL;
  EXPECT(pspec_field_compute(&grid, 0, 0.0, &field) == PSPEC_OK);
  EXPECT(pspec_field_size(field, &count) == PSPEC_OK && count == 15);
  EXPECT(pspec_field_point_at(field, 0, &point) == PSPEC_OK);
  EXPECT(point.z.re == 0.0 && point.z.im == -2.0 && !point.has_oracle);
  EXPECT(pspec_field_point_at(field, 15, &point) == PSPEC_ERR_CONFIG);
  EXPECT(pspec_field_serialize(field, PSPEC_FORMAT_CSV, &csv) == PSPEC_OK);
  EXPECT(strncmp(csv, "re,im,region,lower,upper,oracle,status\n", 39) == 0);
  pspec_string_free(csv);
  pspec_field_free(field);
  grid.n_re = 1;
  EXPECT(pspec_field_compute(&grid, 0, 0.0, &field) == PSPEC_ERR_CONFIG);
}

static void test_birman_schwinger(void) {
  pspec_potential* v = NULL;
  pspec_complex alpha = {-2.0, 0.0}, seed = {-0.7, 0.0}, z = {-0.7498333502743789, 0.0};
  pspec_complex nearest, det, lambdas[3];
  pspec_search_box box = {-3.0, 3.0, -0.99, 0.99};
  double eps[3] = {0.5, 0.25, 0.125}, slope = 0.0, l1 = 0.0;
  int found = 0;
  char *csv = NULL, *failed = NULL;
  EXPECT(pspec_potential_delta_like(alpha, 1e-4, &v) == PSPEC_OK);
  EXPECT(pspec_potential_l1_norm(v, &l1) == PSPEC_OK);
  EXPECT(fabs(l1 - 2.0) < 1e-12);
  EXPECT(pspec_bs_detect(v, z, 1.0, &found, &nearest, &det) == PSPEC_OK);
  EXPECT(found == 1);
  EXPECT(pspec_bs_find_roots(v, 1.0, &box, &seed, 1, &csv, &failed) == PSPEC_OK);
  EXPECT(strstr(csv, "-0.7498") != NULL);
  EXPECT(failed != NULL && failed[0] == '\0');
  pspec_string_free(csv);
  pspec_string_free(failed);
  pspec_potential_free(v);

  EXPECT(pspec_potential_delta_like(alpha, 1e-2, &v) == PSPEC_OK);
  EXPECT(pspec_bs_rate(v, eps, 3, &slope, lambdas) == PSPEC_OK);
  EXPECT(fabs(slope + 2.0) < 0.3);
  pspec_potential_free(v);
}

static void test_models(void) {
  pspec_delta_result r;
  pspec_complex alpha = {2.0, 0.0};
  int sigma[3] = {1, 1, 1};
  double rs[2] = {0.0, 1.0}, bs[1] = {3.0}, norm = 0.0;
  char* csv = NULL;
  EXPECT(pspec_delta_eigenvalue(alpha, &r) == PSPEC_OK);
  EXPECT(r.lambda.re == -0.75 && r.exists == 1 && r.bound_state == 0);
  alpha.re = 0.0;
  EXPECT(pspec_delta_eigenvalue(alpha, &r) == PSPEC_ERR_ZERO_COUPLING);
  EXPECT(pspec_gamma_csv(sigma, rs, 2, &csv) == PSPEC_OK);
  EXPECT(strncmp(csv, "sigma1,sigma2,sigma3,r,re_alpha,im_alpha\n", 41) == 0);
  pspec_string_free(csv);
  EXPECT(pspec_step_csv(1.0, bs, 1, 60.0, &csv) == PSPEC_OK);
  EXPECT(strstr(csv, "3,4,38.6078400") != NULL);
  pspec_string_free(csv);
  alpha.re = 50.0;
  alpha.im = 0.5;
  EXPECT(pspec_dirichlet_norm(alpha, &norm) == PSPEC_OK && fabs(norm - 2.0) < 1e-12);
}

static void test_formatting(void) {
  char buf[32];
  EXPECT(pspec_format_double(0.1, buf, sizeof buf) == PSPEC_OK && strcmp(buf, "0.1") == 0);
  EXPECT(pspec_format_double(-0.0, buf, sizeof buf) == PSPEC_OK && strcmp(buf, "0") == 0);
  EXPECT(pspec_format_double(1.0 / 0.0, buf, sizeof buf) == PSPEC_OK && strcmp(buf, "inf") == 0);
  EXPECT(pspec_format_double(1.5, buf, 3) == PSPEC_ERR_CONFIG);
  EXPECT(strlen(pspec_version()) > 0);
}

int main(void) {
  test_kernel();
  test_bounds();
  test_fd();
  test_field();
  test_birman_schwinger();
  test_models();
  test_formatting();
  if (failures == 0) printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
