#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudospec/errors.hpp"
#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

/// Rectangular grid of n_re x n_im points, endpoints included.
struct GridSpec {
  double re_min = 0.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
  std::size_t n_re = 2;
  std::size_t n_im = 2;

  /// ConfigError unless min < max and both counts are at least 2.
  void validate() const;
  Complex point(std::size_t i_re, std::size_t i_im) const;
};

/// Finite-difference settings for the optional oracle column.
struct OracleConfig {
  std::size_t n = 2000;
  double half_length = 150.0;
};

struct FieldPoint {
  Complex z;
  Region region = Region::kU;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> oracle;
  ErrorCode status = ErrorCode::kOk;
};

/// Points are stored im-outer, re-inner.
struct PseudospectrumField {
  GridSpec grid;
  std::vector<FieldPoint> points;

  const FieldPoint& at(std::size_t i_re, std::size_t i_im) const {
    return points[i_im * grid.n_re + i_re];
  }
};

/// Analytic bounds at every grid point, plus 1/sigma_min of the FD matrix when
/// an oracle config is given. Points on the spectrum carry infinite values and
/// status kSpectrum; other per-point failures are recorded, never thrown.
PseudospectrumField compute_field(const GridSpec& grid,
                                  const std::optional<OracleConfig>& oracle = std::nullopt);

enum class FieldFormat { kCsv, kJson };

std::string field_to_csv(const PseudospectrumField& field);
std::string field_to_json(const PseudospectrumField& field);
/// Reads back field_to_csv output. The grid is reconstructed from the points.
PseudospectrumField field_from_csv(const std::string& text);

/// IoError when the path cannot be written.
void export_field(const PseudospectrumField& field, const std::string& path, FieldFormat format);

}  // namespace pseudospec
