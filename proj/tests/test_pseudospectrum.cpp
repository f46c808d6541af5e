#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/pseudospectrum.hpp"

using namespace pseudospec;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.re_min = -2.0;
  g.re_max = 20.0;
  g.im_min = -2.0;
  g.im_max = 2.0;
  g.n_re = 12;
  g.n_im = 9;
  return g;
}

}  // namespace

TEST_CASE("grid points include both endpoints") {
  const GridSpec g = small_grid();
  CHECK(g.point(0, 0) == Complex{-2.0, -2.0});
  CHECK(g.point(11, 8) == Complex{20.0, 2.0});
  GridSpec bad = g;
  bad.n_re = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = g;
  bad.re_max = bad.re_min;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("field marks the spectrum and stays symmetric") {
  const PseudospectrumField f = compute_field(small_grid());
  REQUIRE(f.points.size() == 12 * 9);
  std::size_t spectrum = 0;
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      const FieldPoint& p = f.at(i, j);
      const FieldPoint& q = f.at(i, 8 - j);
      if (std::isfinite(p.upper)) {
        CHECK(p.lower == doctest::Approx(q.lower));
        CHECK(p.upper == doctest::Approx(q.upper));
      } else {
        CHECK(std::isinf(q.upper));
      }
      if (p.region == Region::kSpectrum) {
        ++spectrum;
        CHECK(std::isinf(p.upper));
        CHECK(p.status == ErrorCode::kSpectrum);
      } else {
        CHECK(p.lower <= p.upper);
      }
    }
  }
  CHECK(spectrum > 0);
}

TEST_CASE("resolvent norm is one at distance one above the strip") {
  GridSpec g{-1.0, 1.0, 1.0, 3.0, 3, 3};
  const PseudospectrumField f = compute_field(g, OracleConfig{1601, 40.0});
  const FieldPoint& p = f.at(1, 1);
  CHECK(p.z == Complex{0.0, 2.0});
  CHECK(p.upper == doctest::Approx(1.0));
  REQUIRE(p.oracle.has_value());
  CHECK(*p.oracle == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("CSV round trip and determinism") {
  const GridSpec g = small_grid();
  const PseudospectrumField a = compute_field(g);
  const PseudospectrumField b = compute_field(g);
  const std::string csv = field_to_csv(a);
  CHECK(csv == field_to_csv(b));
  CHECK(csv.rfind("re,im,region,lower,upper,oracle,status\n", 0) == 0);
  const PseudospectrumField back = field_from_csv(csv);
  CHECK(field_to_csv(back) == csv);
  CHECK_THROWS_AS(field_from_csv("x,y\n1,2\n"), ConfigError);
}

TEST_CASE("JSON export parses and matches the grid") {
  const GridSpec g{0.0, 5.0, -1.5, 1.5, 3, 4};
  const PseudospectrumField f = compute_field(g);
  const auto doc = nlohmann::json::parse(field_to_json(f));
  CHECK(doc["grid"]["n_re"] == 3);
  CHECK(doc["points"].size() == 12);
  const std::string path = "pseudospectrum_export_test.json";
  export_field(f, path, FieldFormat::kJson);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == field_to_json(f));
  std::remove(path.c_str());
  CHECK_THROWS_AS(export_field(f, "/nonexistent-dir/x.csv", FieldFormat::kCsv), IoError);
}
