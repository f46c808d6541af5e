#include "pseudospec/pseudospectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "pseudospec/fd_oracle.hpp"
#include "pseudospec/format.hpp"
#include "pseudospec/parallel.hpp"
#include "pseudospec/resolvent_bounds.hpp"

namespace pseudospec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lerp(double lo, double hi, std::size_t i, std::size_t n) {
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

ErrorCode parse_status(const std::string& name) {
  for (int c = 0; c <= static_cast<int>(ErrorCode::kInternal); ++c) {
    if (name == error_code_name(static_cast<ErrorCode>(c))) return static_cast<ErrorCode>(c);
  }
  throw ConfigError("unknown status '" + name + "'");
}

Region parse_region(const std::string& name) {
  for (Region r : {Region::kDPlus, Region::kDMinus, Region::kU, Region::kW, Region::kSpectrum}) {
    if (name == region_name(r)) return r;
  }
  throw ConfigError("unknown region '" + name + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

void GridSpec::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw ConfigError("grid extents must satisfy min < max");
  if (n_re < 2 || n_im < 2) throw ConfigError("grid needs at least 2 points per axis");
}

Complex GridSpec::point(std::size_t i_re, std::size_t i_im) const {
  return {lerp(re_min, re_max, i_re, n_re), lerp(im_min, im_max, i_im, n_im)};
}

PseudospectrumField compute_field(const GridSpec& grid, const std::optional<OracleConfig>& oracle) {
  grid.validate();
  std::optional<FDOperator> op;
  if (oracle) op = build_fd(FDPotential::sign(), oracle->half_length, oracle->n);

  PseudospectrumField field;
  field.grid = grid;
  field.points.resize(grid.n_re * grid.n_im);
  parallel_for(field.points.size(), [&](std::size_t idx) {
    FieldPoint& p = field.points[idx];
    p.z = grid.point(idx % grid.n_re, idx / grid.n_re);
    p.region = classify_region(p.z);
    if (p.region == Region::kSpectrum) {
      p.lower = p.upper = kInf;
      if (op) p.oracle = kInf;
      p.status = ErrorCode::kSpectrum;
      return;
    }
    try {
      const BoundPair b = bound_pair(p.z);
      p.lower = b.lower;
      p.upper = b.upper;
    } catch (const Error& e) {
      p.status = e.code();
      return;
    }
    if (op) {
      try {
        p.oracle = inverse_min_singular_value(*op, p.z);
      } catch (const Error& e) {
        p.status = e.code();
      }
    }
  });
  return field;
}

std::string field_to_csv(const PseudospectrumField& field) {
  std::string out = "re,im,region,lower,upper,oracle,status\n";
  for (const FieldPoint& p : field.points) {
    out += format_double(p.z.real());
    out += ',';
    out += format_double(p.z.imag());
    out += ',';
    out += region_name(p.region);
    out += ',';
    out += format_double(p.lower);
    out += ',';
    out += format_double(p.upper);
    out += ',';
    if (p.oracle) out += format_double(*p.oracle);
    out += ',';
    out += error_code_name(p.status);
    out += '\n';
  }
  return out;
}

std::string field_to_json(const PseudospectrumField& field) {
  nlohmann::ordered_json j;
  const GridSpec& g = field.grid;
  j["grid"] = {{"re_min", g.re_min}, {"re_max", g.re_max}, {"im_min", g.im_min},
               {"im_max", g.im_max}, {"n_re", g.n_re},     {"n_im", g.n_im}};
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const FieldPoint& p : field.points) {
    nlohmann::ordered_json q;
    q["re"] = p.z.real();
    q["im"] = p.z.imag();
    q["region"] = region_name(p.region);
    q["lower"] = number(p.lower);
    q["upper"] = number(p.upper);
    q["oracle"] = p.oracle ? number(*p.oracle) : nlohmann::ordered_json(nullptr);
    q["status"] = error_code_name(p.status);
    points.push_back(std::move(q));
  }
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

PseudospectrumField field_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "re,im,region,lower,upper,oracle,status")
    throw ConfigError("field CSV: unexpected header");
  PseudospectrumField field;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 7) throw ConfigError("field CSV: expected 7 columns");
    FieldPoint p;
    p.z = {parse_double(cells[0]), parse_double(cells[1])};
    p.region = parse_region(cells[2]);
    p.lower = parse_double(cells[3]);
    p.upper = parse_double(cells[4]);
    if (!cells[5].empty()) p.oracle = parse_double(cells[5]);
    p.status = parse_status(cells[6]);
    field.points.push_back(p);
  }
  if (field.points.empty()) throw ConfigError("field CSV: no data rows");
  // Rows run over re first, so the row count of the first im-line is n_re.
  GridSpec& g = field.grid;
  const double im0 = field.points.front().z.imag();
  g.n_re = static_cast<std::size_t>(
      std::find_if(field.points.begin(), field.points.end(),
                   [&](const FieldPoint& p) { return p.z.imag() != im0; }) -
      field.points.begin());
  g.n_im = field.points.size() / g.n_re;
  g.re_min = field.points.front().z.real();
  g.re_max = field.points[g.n_re - 1].z.real();
  g.im_min = im0;
  g.im_max = field.points.back().z.imag();
  return field;
}

void export_field(const PseudospectrumField& field, const std::string& path, FieldFormat format) {
  write_text_file(path, format == FieldFormat::kCsv ? field_to_csv(field) : field_to_json(field));
}

}  // namespace pseudospec
