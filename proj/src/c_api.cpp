#include "pseudospec/pseudospec.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "pseudospec/birman_schwinger.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/fd_oracle.hpp"
#include "pseudospec/format.hpp"
#include "pseudospec/models.hpp"
#include "pseudospec/potential.hpp"
#include "pseudospec/pseudospectrum.hpp"
#include "pseudospec/resolvent_bounds.hpp"

using namespace pseudospec;

struct pspec_potential {
  PotentialSpec spec;
};

struct pspec_fd_operator {
  FDOperator op;
};

struct pspec_field {
  PseudospectrumField field;
};

namespace {

thread_local std::string g_last_error;

Complex to_cpp(pspec_complex z) { return {z.re, z.im}; }
pspec_complex to_c(Complex z) { return {z.real(), z.imag()}; }

template <class F>
pspec_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return PSPEC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<pspec_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PSPEC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PSPEC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ConfigError(std::string("null argument: ") + what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Complex> complex_list(const pspec_complex* zs, size_t count) {
  if (count > 0) require(zs, "zs");
  std::vector<Complex> out(count);
  for (size_t i = 0; i < count; ++i) out[i] = to_cpp(zs[i]);
  return out;
}

SearchBox to_box(const pspec_search_box* b) {
  require(b, "box");
  return SearchBox{b->re_min, b->re_max, b->im_min, b->im_max};
}

}  // namespace

extern "C" {

const char* pspec_version(void) { return "0.1.0"; }

const char* pspec_last_error(void) { return g_last_error.c_str(); }

const char* pspec_status_name(pspec_status status) {
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* pspec_region_name(pspec_region region) {
  return region_name(static_cast<Region>(region));
}

void pspec_string_free(char* s) { std::free(s); }

pspec_status pspec_format_double(double x, char* buf, size_t size) {
  return guarded([&] {
    require(buf, "buf");
    const std::string s = format_double(x);
    if (s.size() + 1 > size) throw ConfigError("buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

pspec_status pspec_wave_numbers(pspec_complex z, pspec_complex* k_plus, pspec_complex* k_minus) {
  return guarded([&] {
    require(k_plus, "k_plus");
    require(k_minus, "k_minus");
    const WaveNumbers k = wave_numbers(to_cpp(z));
    *k_plus = to_c(k.k_plus);
    *k_minus = to_c(k.k_minus);
  });
}

pspec_status pspec_classify_region(pspec_complex z, double tol_spec, pspec_region* region) {
  return guarded([&] {
    require(region, "region");
    *region = static_cast<pspec_region>(classify_region(to_cpp(z), tol_spec));
  });
}

pspec_status pspec_resolvent_kernel(pspec_complex z, double x, double y, pspec_complex* value) {
  return guarded([&] {
    require(value, "value");
    *value = to_c(resolvent_kernel(to_cpp(z), x, y));
  });
}

pspec_status pspec_dirichlet_kernel(pspec_complex z, double x, double y, pspec_complex* value) {
  return guarded([&] {
    require(value, "value");
    *value = to_c(dirichlet_kernel(to_cpp(z), x, y));
  });
}

pspec_status pspec_bound_pair(pspec_complex z, double* lower, double* upper, unsigned* methods) {
  return guarded([&] {
    require(lower, "lower");
    require(upper, "upper");
    const BoundPair b = bound_pair(to_cpp(z));
    *lower = b.lower;
    *upper = b.upper;
    if (methods != nullptr) *methods = b.methods;
  });
}

pspec_status pspec_schur_upper_bound(pspec_complex z, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = schur_upper_bound(to_cpp(z));
  });
}

pspec_status pspec_pseudomode_lower_bound(pspec_complex z, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = pseudomode_lower_bound(to_cpp(z));
  });
}

pspec_status pspec_numrange_bound(pspec_complex z, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = numrange_bound(to_cpp(z));
  });
}

pspec_status pspec_regularized_pseudomode_ratio(pspec_complex z, double a, double* ratio) {
  return guarded([&] {
    require(ratio, "ratio");
    *ratio = regularized_pseudomode_ratio(to_cpp(z), a).ratio;
  });
}

pspec_status pspec_potential_gaussian(pspec_complex amplitude, double width,
                                      pspec_potential** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pspec_potential{PotentialSpec(GaussianPotential{to_cpp(amplitude), width})};
  });
}

pspec_status pspec_potential_bump(pspec_complex amplitude, double center, double radius,
                                  pspec_potential** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pspec_potential{PotentialSpec(BumpPotential{to_cpp(amplitude), center, radius})};
  });
}

pspec_status pspec_potential_delta_like(pspec_complex alpha, double radius,
                                        pspec_potential** out) {
  return guarded([&] {
    require(out, "out");
    if (!(radius > 0.0)) throw ConfigError("bump radius must be positive");
    *out = new pspec_potential{PotentialSpec::delta_like(to_cpp(alpha), radius)};
  });
}

pspec_status pspec_potential_step(double a, pspec_complex b, pspec_potential** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pspec_potential{PotentialSpec(StepPotential{a, to_cpp(b)})};
  });
}

pspec_status pspec_potential_sampled(const double* x, const pspec_complex* values, size_t count,
                                     pspec_potential** out) {
  return guarded([&] {
    require(out, "out");
    require(x, "x");
    require(values, "values");
    SampledPotential s;
    s.x.assign(x, x + count);
    for (size_t i = 0; i < count; ++i) s.values.push_back(to_cpp(values[i]));
    *out = new pspec_potential{PotentialSpec(std::move(s))};
  });
}

void pspec_potential_free(pspec_potential* v) { delete v; }

pspec_status pspec_potential_l1_norm(const pspec_potential* v, double* value) {
  return guarded([&] {
    require(v, "v");
    require(value, "value");
    *value = v->spec.l1_norm();
  });
}

pspec_status pspec_potential_describe(const pspec_potential* v, char** text) {
  return guarded([&] {
    require(v, "v");
    require(text, "text");
    *text = duplicate(v->spec.describe());
  });
}

pspec_status pspec_fd_build(const pspec_fd_params* p, pspec_fd_operator** out) {
  return guarded([&] {
    require(p, "params");
    require(out, "out");
    FDPotential pot;
    switch (p->kind) {
      case PSPEC_FD_FREE: pot = FDPotential::free(); break;
      case PSPEC_FD_SIGN: pot = FDPotential::sign(); break;
      case PSPEC_FD_SIGN_DIRICHLET_SPLIT: pot = FDPotential::dirichlet_split(); break;
      case PSPEC_FD_STEP: pot = FDPotential::step(p->a, to_cpp(p->b)); break;
      case PSPEC_FD_SIGN_PLUS:
        require(p->potential, "potential");
        pot = FDPotential::sign_plus(p->epsilon, p->potential->spec);
        break;
      case PSPEC_FD_SMOOTHED: pot = FDPotential::smoothed(p->a); break;
      default: throw ConfigError("unknown finite-difference potential kind");
    }
    std::optional<Complex> jump;
    if (p->has_center_jump) jump = to_cpp(p->center_jump);
    *out = new pspec_fd_operator{build_fd(pot, p->half_length, p->n, jump)};
  });
}

void pspec_fd_free(pspec_fd_operator* op) { delete op; }

pspec_status pspec_fd_size(const pspec_fd_operator* op, size_t* n, double* h) {
  return guarded([&] {
    require(op, "op");
    if (n != nullptr) *n = op->op.n;
    if (h != nullptr) *h = op->op.h;
  });
}

pspec_status pspec_fd_resolvent_norm(const pspec_fd_operator* op, pspec_complex z,
                                     int estimate_error, double* value, double* error_estimate) {
  return guarded([&] {
    require(op, "op");
    require(value, "value");
    const OracleResult r = resolvent_norm_fd(op->op, to_cpp(z), estimate_error != 0);
    *value = r.value;
    if (error_estimate != nullptr) *error_estimate = r.estimated_discretization_error;
  });
}

pspec_status pspec_fd_nearest_eigenvalue(const pspec_fd_operator* op, pspec_complex shift,
                                         pspec_complex* value, double* error_estimate) {
  return guarded([&] {
    require(op, "op");
    require(value, "value");
    const EigenOracleResult r = nearest_eigenvalue_fd(op->op, to_cpp(shift));
    *value = to_c(r.value);
    if (error_estimate != nullptr) *error_estimate = r.estimated_discretization_error;
  });
}

pspec_status pspec_fd_eigenvalues(const pspec_fd_operator* op, pspec_complex* values,
                                  size_t capacity, size_t* count) {
  return guarded([&] {
    require(op, "op");
    require(count, "count");
    const std::vector<Complex> w = eigenvalues_fd(op->op);
    *count = w.size();
    if (capacity > 0) require(values, "values");
    for (size_t i = 0; i < w.size() && i < capacity; ++i) values[i] = to_c(w[i]);
  });
}

pspec_status pspec_field_compute(const pspec_grid* grid, size_t oracle_n,
                                 double oracle_half_length, pspec_field** out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    GridSpec g{grid->re_min, grid->re_max, grid->im_min, grid->im_max, grid->n_re, grid->n_im};
    std::optional<OracleConfig> oracle;
    if (oracle_n > 0) oracle = OracleConfig{oracle_n, oracle_half_length};
    *out = new pspec_field{compute_field(g, oracle)};
  });
}

void pspec_field_free(pspec_field* field) { delete field; }

pspec_status pspec_field_size(const pspec_field* field, size_t* count) {
  return guarded([&] {
    require(field, "field");
    require(count, "count");
    *count = field->field.points.size();
  });
}

pspec_status pspec_field_point_at(const pspec_field* field, size_t index,
                                  pspec_field_point* point) {
  return guarded([&] {
    require(field, "field");
    require(point, "point");
    if (index >= field->field.points.size()) throw ConfigError("field index out of range");
    const FieldPoint& p = field->field.points[index];
    point->z = to_c(p.z);
    point->region = static_cast<pspec_region>(p.region);
    point->lower = p.lower;
    point->upper = p.upper;
    point->has_oracle = p.oracle.has_value() ? 1 : 0;
    point->oracle = p.oracle.value_or(0.0);
    point->status = static_cast<pspec_status>(p.status);
  });
}

pspec_status pspec_field_serialize(const pspec_field* field, pspec_format format, char** text) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    *text = duplicate(format == PSPEC_FORMAT_JSON ? field_to_json(field->field)
                                                  : field_to_csv(field->field));
  });
}

pspec_status pspec_field_export(const pspec_field* field, const char* path, pspec_format format) {
  return guarded([&] {
    require(field, "field");
    require(path, "path");
    export_field(field->field, path,
                 format == PSPEC_FORMAT_JSON ? FieldFormat::kJson : FieldFormat::kCsv);
  });
}

pspec_status pspec_bs_hs_norm(const pspec_potential* v, pspec_complex z, double* value) {
  return guarded([&] {
    require(v, "v");
    require(value, "value");
    const Complex zz = to_cpp(z);
    *value = hs_norm(zz, v->spec, bs_grid(v->spec, std::abs(zz)));
  });
}

pspec_status pspec_bs_hs_sweep(const pspec_potential* v, const pspec_complex* zs, size_t count,
                               char** csv) {
  return guarded([&] {
    require(v, "v");
    require(csv, "csv");
    *csv = duplicate(hs_sweep_to_csv(hs_sweep(complex_list(zs, count), v->spec)));
  });
}

pspec_status pspec_bs_detect(const pspec_potential* v, pspec_complex z, double eps,
                             int* is_eigenvalue, pspec_complex* nearest, pspec_complex* det) {
  return guarded([&] {
    require(v, "v");
    const Complex zz = to_cpp(z);
    const Detection d = detect_eigenvalue(zz, eps, v->spec, bs_grid(v->spec, std::abs(zz)));
    if (is_eigenvalue != nullptr) *is_eigenvalue = d.is_eigenvalue ? 1 : 0;
    if (nearest != nullptr) *nearest = to_c(d.nearest_K_eigenvalue_to_minus_one);
    if (det != nullptr) *det = to_c(d.det_value);
  });
}

pspec_status pspec_bs_find_roots(const pspec_potential* v, double eps, const pspec_search_box* box,
                                 const pspec_complex* seeds, size_t seed_count, char** csv,
                                 char** failures) {
  return guarded([&] {
    require(v, "v");
    require(csv, "csv");
    const RootSearch r = find_eigenvalues(eps, v->spec, to_box(box), complex_list(seeds, seed_count));
    std::string fails;
    for (const SeedFailure& f : r.failures)
      fails += std::to_string(f.seed_index) + ": " + f.message + "\n";
    *csv = duplicate(roots_to_csv(r.roots));
    if (failures != nullptr) *failures = duplicate(fails);
  });
}

pspec_status pspec_bs_rate(const pspec_potential* v, const double* epsilons, size_t epsilon_count,
                           double* slope, pspec_complex* eigenvalues) {
  return guarded([&] {
    require(v, "v");
    require(slope, "slope");
    if (epsilon_count > 0) require(epsilons, "epsilons");
    const std::vector<double> eps(epsilons, epsilons + epsilon_count);
    const RateFit fit = weak_coupling_rate(v->spec, eps);
    *slope = fit.slope;
    if (eigenvalues != nullptr)
      for (size_t i = 0; i < fit.eigenvalues.size(); ++i) eigenvalues[i] = to_c(fit.eigenvalues[i]);
  });
}

pspec_status pspec_delta_eigenvalue(pspec_complex alpha, pspec_delta_result* out) {
  return guarded([&] {
    require(out, "out");
    const DeltaModel m = delta_eigenvalue(to_cpp(alpha));
    out->alpha = alpha;
    out->lambda = to_c(m.lambda);
    out->exists = m.exists ? 1 : 0;
    out->bound_state = m.bound_state ? 1 : 0;
  });
}

pspec_status pspec_delta_csv(const pspec_complex* alphas, size_t count, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    std::vector<DeltaModel> rows;
    for (const Complex a : complex_list(alphas, count)) rows.push_back(delta_eigenvalue(a));
    *csv = duplicate(delta_to_csv(rows));
  });
}

pspec_status pspec_gamma_csv(const int* sigma, const double* r, size_t count, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    if (count > 0) require(r, "r");
    const std::vector<double> rs(r, r + count);
    std::vector<GammaCurve> curves;
    if (sigma != nullptr) {
      curves.push_back(gamma_curve({sigma[0], sigma[1], sigma[2]}, rs));
    } else {
      for (const SignTriple& s : all_sign_triples()) curves.push_back(gamma_curve(s, rs));
    }
    *csv = duplicate(gamma_to_csv(curves));
  });
}

pspec_status pspec_step_residual(pspec_complex lambda, double a, pspec_complex b,
                                 pspec_complex* value) {
  return guarded([&] {
    require(value, "value");
    *value = to_c(implicit_residual(to_cpp(lambda), a, to_cpp(b)));
  });
}

pspec_status pspec_step_csv(double a, const double* bs, size_t count, double lambda_max,
                            char** csv) {
  return guarded([&] {
    require(csv, "csv");
    if (count > 0) require(bs, "bs");
    std::vector<StepModel> models;
    for (size_t i = 0; i < count; ++i) models.push_back(find_step_eigenvalues(a, bs[i], lambda_max));
    *csv = duplicate(step_to_csv(models));
  });
}

pspec_status pspec_dirichlet_norm(pspec_complex z, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = dirichlet_norm(to_cpp(z));
  });
}

pspec_status pspec_dirichlet_uniformity(const pspec_potential* v, const pspec_complex* zs,
                                        size_t count, double* hs_norms, double* max_hs,
                                        double* slope, int* flagged) {
  return guarded([&] {
    require(v, "v");
    const DirichletUniformity r = dirichlet_bs_uniformity(v->spec, complex_list(zs, count));
    if (hs_norms != nullptr)
      for (size_t i = 0; i < count; ++i) hs_norms[i] = r.hs_norm[i];
    if (max_hs != nullptr) *max_hs = r.max_hs;
    if (slope != nullptr) *slope = r.slope;
    if (flagged != nullptr) *flagged = r.flagged ? 1 : 0;
  });
}

}  // extern "C"
