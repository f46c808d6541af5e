// Command-line front end. Talks to the library only through pseudospec.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pseudospec/pseudospec.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitConfig = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(pspec_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  pspec_status status;
};

void check(pspec_status s) {
  if (s != PSPEC_OK) {
    throw ApiError(s, std::string(pspec_status_name(s)) + ": " + pspec_last_error());
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { pspec_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string fmt(double x) {
  char buf[40];
  check(pspec_format_double(x, buf, sizeof buf));
  return buf;
}

// ---------------------------------------------------------------- parsing

enum class Kind { kReal, kInt, kComplex, kRange, kSpan, kText, kSigns, kKeyValues, kFlag };

double to_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

long to_int(const std::string& s) {
  const double v = to_real(s);
  if (v != std::floor(v)) throw UsageError("not an integer: '" + s + "'");
  return static_cast<long>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(s);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

pspec_complex to_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("complex values are written re,im: '" + s + "'");
  return {to_real(parts[0]), to_real(parts[1])};
}

struct Range {
  double min = 0.0;
  double max = 0.0;
  long count = 0;
  std::vector<double> values(bool logarithmic) const {
    std::vector<double> out;
    for (long i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      if (logarithmic) {
        out.push_back(i == 0 ? min : i + 1 == count ? max : std::exp(std::log(min) + t * (std::log(max) - std::log(min))));
      } else {
        out.push_back(i + 1 == count ? max : min + t * (max - min));
      }
    }
    return out;
  }
};

Range to_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw UsageError("ranges are written min:max:count: '" + s + "'");
  Range r{to_real(parts[0]), to_real(parts[1]), to_int(parts[2])};
  if (r.count < 1) throw UsageError("range count must be positive: '" + s + "'");
  if (r.count > 1 && !(r.min <= r.max)) throw UsageError("range needs min <= max: '" + s + "'");
  return r;
}

std::pair<double, double> to_span(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError("intervals are written min:max: '" + s + "'");
  return {to_real(parts[0]), to_real(parts[1])};
}

std::map<std::string, double> to_key_values(const std::string& s) {
  std::map<std::string, double> out;
  for (const auto& item : split(s, ',')) {
    const auto kv = split(item, '=');
    if (kv.size() != 2 || kv[0].empty()) throw UsageError("expected key=value pairs: '" + s + "'");
    out[kv[0]] = to_real(kv[1]);
  }
  return out;
}

Json typed(Kind kind, const std::string& raw) {
  switch (kind) {
    case Kind::kReal: return to_real(raw);
    case Kind::kInt: return to_int(raw);
    case Kind::kComplex: {
      const pspec_complex z = to_complex(raw);
      return Json::array({z.re, z.im});
    }
    case Kind::kRange: {
      const Range r = to_range(raw);
      return Json{{"min", r.min}, {"max", r.max}, {"count", r.count}};
    }
    case Kind::kSpan: {
      const auto [a, b] = to_span(raw);
      return Json::array({a, b});
    }
    case Kind::kSigns: {
      Json out = Json::array();
      for (const auto& p : split(raw, ',')) out.push_back(to_int(p));
      return out;
    }
    case Kind::kKeyValues: {
      Json out = Json::object();
      for (const auto& [k, v] : to_key_values(raw)) out[k] = v;
      return out;
    }
    case Kind::kText:
    case Kind::kFlag: return raw;
  }
  return raw;
}

// ---------------------------------------------------------------- commands

struct Param {
  Kind kind;
  bool multiple;
  std::vector<std::string> values;
  bool flag = false;
  CLI::Option* option = nullptr;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::unique_ptr<Param>> params;
  std::vector<std::string> order;
  std::function<std::string(Command&)> run;

  Param& add(const std::string& name, Kind kind, const std::string& help, bool multiple = false,
             const std::string& fallback = "") {
    auto p = std::make_unique<Param>(Param{kind, multiple, {}, false, nullptr});
    if (kind == Kind::kFlag) {
      p->option = app->add_flag("--" + name, p->flag, help);
    } else if (multiple) {
      p->option = app->add_option("--" + name, p->values, help)->allow_extra_args(true);
    } else {
      p->option = app->add_option("--" + name, p->values, help)->expected(1);
    }
    if (!fallback.empty()) {
      p->values = {fallback};
      p->option->default_str(fallback);
    }
    Param& ref = *p;
    order.push_back(name);
    params[name] = std::move(p);
    return ref;
  }

  Param& param(const std::string& name) { return *params.at(name); }
  bool has(const std::string& name) { return !param(name).values.empty() || param(name).flag; }
  const std::string& raw(const std::string& name) {
    Param& p = param(name);
    if (p.values.empty()) throw UsageError("--" + name + " is required");
    return p.values.back();
  }
  double real(const std::string& name) { return to_real(raw(name)); }
  long integer(const std::string& name) { return to_int(raw(name)); }
  pspec_complex complex(const std::string& name) { return to_complex(raw(name)); }
  Range range(const std::string& name) { return to_range(raw(name)); }
  std::vector<pspec_complex> complexes(const std::string& name) {
    std::vector<pspec_complex> out;
    for (const auto& v : param(name).values) out.push_back(to_complex(v));
    return out;
  }
  std::vector<double> reals(const std::string& name) {
    std::vector<double> out;
    for (const auto& v : param(name).values) out.push_back(to_real(v));
    return out;
  }
  bool flag(const std::string& name) { return param(name).flag; }

  Json resolved() {
    Json out = Json::object();
    for (const auto& name : order) {
      Param& p = *params[name];
      if (p.kind == Kind::kFlag) {
        out[name] = p.flag;
      } else if (p.values.empty()) {
        out[name] = nullptr;
      } else if (p.multiple) {
        Json list = Json::array();
        for (const auto& v : p.values) list.push_back(typed(p.kind, v));
        out[name] = list;
      } else {
        out[name] = typed(p.kind, p.values.back());
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------- helpers

struct PotentialHandle {
  pspec_potential* p = nullptr;
  ~PotentialHandle() { pspec_potential_free(p); }
};

void add_potential_options(Command& c) {
  c.add("potential", Kind::kText, "gaussian | bump | step | delta", false, "gaussian");
  c.add("amp", Kind::kComplex, "amplitude re,im (gaussian, bump)", false, "1,0");
  c.add("width", Kind::kReal, "Gaussian width", false, "1");
  c.add("center", Kind::kReal, "bump center", false, "0");
  c.add("radius", Kind::kReal, "bump radius", false, "0.01");
  c.add("a", Kind::kReal, "step half-width", false, "1");
  c.add("b", Kind::kComplex, "step depth re,im", false, "3,0");
  c.add("alpha", Kind::kComplex, "delta coupling re,im (bump of amplitude alpha/(2 radius))",
        false, "-2,0");
}

void make_potential(Command& c, PotentialHandle& h) {
  const std::string kind = c.raw("potential");
  if (kind == "gaussian") {
    check(pspec_potential_gaussian(c.complex("amp"), c.real("width"), &h.p));
  } else if (kind == "bump") {
    check(pspec_potential_bump(c.complex("amp"), c.real("center"), c.real("radius"), &h.p));
  } else if (kind == "step") {
    check(pspec_potential_step(c.real("a"), c.complex("b"), &h.p));
  } else if (kind == "delta") {
    check(pspec_potential_delta_like(c.complex("alpha"), c.real("radius"), &h.p));
  } else {
    throw UsageError("unknown potential '" + kind + "'");
  }
}

std::vector<pspec_complex> sweep_points(Command& c) {
  const std::vector<double> re = c.range("re").values(c.flag("log"));
  std::vector<pspec_complex> zs;
  for (double im : c.reals("im"))
    for (double r : re) zs.push_back({r, im});
  return zs;
}

Json csv_to_json(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  const auto header = split(line, ',');
  Json rows = Json::array();
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    Json row = Json::object();
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) {
      const std::string& s = cells[i];
      if (s.empty()) {
        row[header[i]] = nullptr;
      } else if (s == "true" || s == "false") {
        row[header[i]] = s == "true";
      } else {
        try {
          std::size_t pos = 0;
          const double v = std::stod(s, &pos);
          if (pos == s.size() && std::isfinite(v)) {
            row[header[i]] = v;
            continue;
          }
        } catch (const std::exception&) {
        }
        row[header[i]] = s;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------- subcommands

std::string run_kernel_eval(Command& c) {
  const pspec_complex z = c.complex("z");
  const bool dirichlet = c.flag("dirichlet");
  std::string out = "re_z,im_z,x,y,re_kernel,im_kernel\n";
  for (double x : c.reals("x")) {
    for (double y : c.reals("y")) {
      pspec_complex v;
      check(dirichlet ? pspec_dirichlet_kernel(z, x, y, &v) : pspec_resolvent_kernel(z, x, y, &v));
      out += fmt(z.re) + ',' + fmt(z.im) + ',' + fmt(x) + ',' + fmt(y) + ',' + fmt(v.re) + ',' +
             fmt(v.im) + '\n';
    }
  }
  return out;
}

std::string run_bounds_sweep(Command& c) {
  const std::vector<double> re = c.range("re").values(false);
  const std::vector<double> im = c.range("im").values(false);
  std::string out = "re,im,region,lower,upper,methods,status\n";
  for (double y : im) {
    for (double x : re) {
      const pspec_complex z{x, y};
      pspec_region region;
      check(pspec_classify_region(z, 1e-12, &region));
      double lower = INFINITY;
      double upper = INFINITY;
      unsigned methods = 0;
      const pspec_status s = pspec_bound_pair(z, &lower, &upper, &methods);
      if (s != PSPEC_OK && s != PSPEC_ERR_SPECTRUM) check(s);
      out += fmt(x) + ',' + fmt(y) + ',' + pspec_region_name(region) + ',' + fmt(lower) + ',' +
             fmt(upper) + ',' + std::to_string(methods) + ',' + pspec_status_name(s) + '\n';
    }
  }
  return out;
}

std::string run_bounds_smooth(Command& c) {
  const std::vector<double> taus = c.range("tau").values(c.flag("log"));
  const double a = c.real("a");
  std::string out = "tau,a,ratio\n";
  for (double tau : taus) {
    double ratio = 0.0;
    check(pspec_regularized_pseudomode_ratio({tau, 0.0}, a, &ratio));
    out += fmt(tau) + ',' + fmt(a) + ',' + fmt(ratio) + '\n';
  }
  return out;
}

std::string run_field(Command& c, bool json) {
  const Range re = c.range("re");
  const Range im = c.range("im");
  pspec_grid grid{re.min, re.max, im.min, im.max, static_cast<size_t>(re.count),
                  static_cast<size_t>(im.count)};
  size_t n = 0;
  double half_length = 0.0;
  if (c.has("oracle")) {
    const auto kv = to_key_values(c.raw("oracle"));
    for (const auto& [k, v] : kv)
      if (k != "n" && k != "L") throw UsageError("--oracle accepts n=... and L=...");
    if (!kv.count("n") || !kv.count("L")) throw UsageError("--oracle needs both n and L");
    n = static_cast<size_t>(kv.at("n"));
    half_length = kv.at("L");
  }
  pspec_field* field = nullptr;
  check(pspec_field_compute(&grid, n, half_length, &field));
  std::unique_ptr<pspec_field, void (*)(pspec_field*)> guard(field, pspec_field_free);
  CString text;
  check(pspec_field_serialize(field, json ? PSPEC_FORMAT_JSON : PSPEC_FORMAT_CSV, &text.p));
  return text.str();
}

std::string run_bs_sweep(Command& c) {
  PotentialHandle v;
  make_potential(c, v);
  const auto zs = sweep_points(c);
  CString csv;
  check(pspec_bs_hs_sweep(v.p, zs.data(), zs.size(), &csv.p));
  return csv.str();
}

std::string run_bs_roots(Command& c) {
  PotentialHandle v;
  make_potential(c, v);
  const auto [re_min, re_max] = to_span(c.raw("re-window"));
  const auto [im_min, im_max] = to_span(c.raw("im-window"));
  const pspec_search_box box{re_min, re_max, im_min, im_max};
  const auto starts = c.complexes("start");
  if (starts.empty()) throw UsageError("--start is required");
  CString csv;
  CString failures;
  check(pspec_bs_find_roots(v.p, c.real("eps"), &box, starts.data(), starts.size(), &csv.p,
                            &failures.p));
  if (!failures.str().empty()) std::cerr << "seeds without a root:\n" << failures.str();
  return csv.str();
}

std::string run_bs_rate(Command& c) {
  PotentialHandle v;
  make_potential(c, v);
  const auto eps = c.reals("eps");
  std::vector<pspec_complex> lambdas(eps.size());
  double slope = 0.0;
  check(pspec_bs_rate(v.p, eps.data(), eps.size(), &slope, lambdas.data()));
  std::string out = "eps,re_lambda,im_lambda,slope\n";
  for (std::size_t i = 0; i < eps.size(); ++i)
    out += fmt(eps[i]) + ',' + fmt(lambdas[i].re) + ',' + fmt(lambdas[i].im) + ',' + fmt(slope) + '\n';
  return out;
}

std::string run_delta(Command& c) {
  const auto alphas = c.complexes("alpha");
  if (alphas.empty()) throw UsageError("--alpha is required");
  CString csv;
  check(pspec_delta_csv(alphas.data(), alphas.size(), &csv.p));
  return csv.str();
}

std::string run_gamma(Command& c) {
  const std::vector<double> r = c.range("r").values(false);
  CString csv;
  if (c.has("sigma")) {
    std::vector<int> sigma;
    for (const auto& p : split(c.raw("sigma"), ',')) sigma.push_back(static_cast<int>(to_int(p)));
    if (sigma.size() != 3) throw UsageError("--sigma takes three signs s1,s2,s3");
    check(pspec_gamma_csv(sigma.data(), r.data(), r.size(), &csv.p));
  } else {
    check(pspec_gamma_csv(nullptr, r.data(), r.size(), &csv.p));
  }
  return csv.str();
}

std::string run_step(Command& c) {
  std::vector<double> bs = c.reals("b");
  if (c.has("b-range")) {
    const auto extra = c.range("b-range").values(false);
    bs.insert(bs.end(), extra.begin(), extra.end());
  }
  if (bs.empty()) throw UsageError("--b or --b-range is required");
  CString csv;
  check(pspec_step_csv(c.real("a"), bs.data(), bs.size(), c.real("lambda-max"), &csv.p));
  return csv.str();
}

std::string run_dirichlet(Command& c) {
  if (c.flag("uniformity")) {
    PotentialHandle v;
    make_potential(c, v);
    const auto zs = sweep_points(c);
    std::vector<double> hs(zs.size());
    double max_hs = 0.0;
    double slope = 0.0;
    int flagged = 0;
    check(pspec_dirichlet_uniformity(v.p, zs.data(), zs.size(), hs.data(), &max_hs, &slope,
                                     &flagged));
    std::string out = "re_z,im_z,hs_norm\n";
    for (std::size_t i = 0; i < zs.size(); ++i)
      out += fmt(zs[i].re) + ',' + fmt(zs[i].im) + ',' + fmt(hs[i]) + '\n';
    std::cerr << "max_hs=" << fmt(max_hs) << " slope=" << fmt(slope)
              << (flagged ? " (slope exceeds 0.1)" : "") << '\n';
    return out;
  }
  const auto zs = c.complexes("z");
  if (zs.empty()) throw UsageError("--z is required");
  std::string out = "re,im,norm\n";
  for (const auto& z : zs) {
    double norm = 0.0;
    check(pspec_dirichlet_norm(z, &norm));
    out += fmt(z.re) + ',' + fmt(z.im) + ',' + fmt(norm) + '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolvent, pseudospectrum and eigenvalue computations for -d^2/dx^2 + i sgn(x)"};
  app.require_subcommand(1);
  app.fallthrough();

  long seed = 0;
  std::string output;
  std::string format = "csv";
  bool dry_run = false;
  app.add_option("--seed", seed, "seed for any randomised step (default 0)");
  app.add_option("--output,-o", output, "write the result to this file instead of stdout");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--dry-run", dry_run, "print the resolved configuration as JSON and exit");

  std::vector<std::unique_ptr<Command>> commands;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                     const std::string& full_name) -> Command& {
    auto c = std::make_unique<Command>();
    c->name = full_name;
    c->app = parent->add_subcommand(name, help);
    commands.push_back(std::move(c));
    return *commands.back();
  };

  bool json_output = false;

  CLI::App* kernel = app.add_subcommand("kernel", "resolvent kernel");
  kernel->require_subcommand(1);
  {
    Command& c = command(kernel, "eval", "evaluate R_z(x, y) on a grid of x and y", "kernel eval");
    c.add("z", Kind::kComplex, "spectral parameter re,im").option->required();
    c.add("x", Kind::kReal, "x values", true).option->required();
    c.add("y", Kind::kReal, "y values", true).option->required();
    c.add("dirichlet", Kind::kFlag, "use the Dirichlet-split kernel");
    c.run = run_kernel_eval;
  }

  CLI::App* bounds = app.add_subcommand("bounds", "analytic resolvent bounds");
  bounds->require_subcommand(1);
  {
    Command& c = command(bounds, "sweep", "lower/upper bounds on a rectangular grid", "bounds sweep");
    c.add("re", Kind::kRange, "real range min:max:count").option->required();
    c.add("im", Kind::kRange, "imaginary range min:max:count").option->required();
    c.run = run_bounds_sweep;
  }
  {
    Command& c = command(bounds, "smooth", "pseudomode ratio for the smoothed sign potential",
                         "bounds smooth");
    c.add("tau", Kind::kRange, "real range min:max:count").option->required();
    c.add("a", Kind::kReal, "smoothing length", false, "1");
    c.add("log", Kind::kFlag, "log-spaced tau");
    c.run = run_bounds_smooth;
  }
  {
    Command& c = command(&app, "field", "pseudospectrum field with optional FD oracle", "field");
    c.add("re", Kind::kRange, "real range min:max:count").option->required();
    c.add("im", Kind::kRange, "imaginary range min:max:count").option->required();
    c.add("oracle", Kind::kKeyValues, "finite-difference oracle n=...,L=...");
    c.run = [&](Command& cmd) { return run_field(cmd, json_output); };
  }

  CLI::App* bs = app.add_subcommand("bs", "Birman-Schwinger operator");
  bs->require_subcommand(1);
  {
    Command& c = command(bs, "sweep", "Hilbert-Schmidt norms and decomposition", "bs sweep");
    add_potential_options(c);
    c.add("re", Kind::kRange, "Re z range min:max:count").option->required();
    c.add("im", Kind::kReal, "Im z values", true, "0");
    c.add("log", Kind::kFlag, "log-spaced Re z");
    c.run = run_bs_sweep;
  }
  {
    Command& c = command(bs, "roots", "eigenvalues of H + eps V by secant iteration", "bs roots");
    add_potential_options(c);
    c.add("eps", Kind::kReal, "coupling", false, "1");
    c.add("re-window", Kind::kSpan, "search box real interval min:max").option->required();
    c.add("im-window", Kind::kSpan, "search box imaginary interval min:max", false, "-0.99:0.99");
    c.add("start", Kind::kComplex, "starting points re,im", true).option->required();
    c.run = run_bs_roots;
  }
  {
    Command& c = command(bs, "rate", "weak-coupling rate fit", "bs rate");
    add_potential_options(c);
    c.param("potential").values = {"delta"};
    c.param("potential").option->default_str("delta");
    c.add("eps", Kind::kReal, "decreasing couplings", true).option->required();
    c.run = run_bs_rate;
  }
  {
    Command& c = command(&app, "delta", "eigenvalue of the point interaction", "delta");
    c.add("alpha", Kind::kComplex, "coupling re,im", true).option->required();
    c.run = run_delta;
  }
  {
    Command& c = command(&app, "gamma", "curve of couplings without an eigenvalue", "gamma");
    c.add("sigma", Kind::kSigns, "sign triple s1,s2,s3 (default: all eight)");
    c.add("r", Kind::kRange, "parameter range min:max:count", false, "0:10:101");
    c.run = run_gamma;
  }
  {
    Command& c = command(&app, "step", "real eigenvalues of the step potential", "step");
    c.add("a", Kind::kReal, "half-width", false, "1");
    c.add("b", Kind::kReal, "depth values", true);
    c.add("b-range", Kind::kRange, "depth range min:max:count");
    c.add("lambda-max", Kind::kReal, "upper end of the search window", false, "60");
    c.run = run_step;
  }
  {
    Command& c = command(&app, "dirichlet", "Dirichlet-split operator", "dirichlet");
    c.add("z", Kind::kComplex, "points re,im", true);
    c.add("uniformity", Kind::kFlag, "Hilbert-Schmidt sweep of the Dirichlet BS operator");
    add_potential_options(c);
    c.add("re", Kind::kRange, "Re z range for --uniformity", false, "100:10000:9");
    c.add("im", Kind::kReal, "Im z values for --uniformity", true, "0");
    c.add("log", Kind::kFlag, "log-spaced Re z");
    c.run = run_dirichlet;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  Command* selected = nullptr;
  for (auto& c : commands)
    if (c->app->parsed()) selected = c.get();
  if (selected == nullptr) {
    std::cerr << app.help();
    return kExitConfig;
  }
  json_output = format == "json";

  try {
    if (dry_run) {
      Json config;
      config["subcommand"] = selected->name;
      config["parameters"] = selected->resolved();
      config["output"] = output.empty() ? Json(nullptr) : Json(output);
      config["format"] = format;
      config["seed"] = seed;
      std::cout << config.dump(2) << '\n';
      return 0;
    }
    std::string result = selected->run(*selected);
    if (json_output && selected->name != "field") result = csv_to_json(result).dump(2) + "\n";
    if (output.empty()) {
      std::cout << result;
    } else {
      std::ofstream out(output, std::ios::binary | std::ios::trunc);
      if (!out) throw ApiError(PSPEC_ERR_IO, "IoError: cannot open '" + output + "'");
      out << result;
      if (!out) throw ApiError(PSPEC_ERR_IO, "IoError: write to '" + output + "' failed");
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << selected->app->help();
    return kExitConfig;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == PSPEC_ERR_CONFIG ? kExitConfig : kExitDomain;
  }
}
