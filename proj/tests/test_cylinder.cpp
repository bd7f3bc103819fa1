#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oblique/cylinder.hpp"
#include "oblique/elliptic.hpp"
#include "oblique/errors.hpp"
#include "support/oracles.hpp"

using namespace oblique;
using oblique::testing::kPi;
using oblique::testing::rel_err;

namespace {

// 2 int_0^1 int_{-1}^1 sqrt((a^2 v^2 + b^2) / (1 - v^2)) dv du; the u-integral is trivial.
double lateral_reference(double a, double b) {
  return 2.0 * testing::reference_chebyshev(
                   [a, b](double v) { return std::sqrt(a * a * v * v + b * b); }, -1.0, 1.0);
}

double imc_reference(double a, double b) {
  return testing::reference_chebyshev(
      [a, b](double v) { return (a * a + b * b) * b / (a * a * v * v + b * b); }, -1.0, 1.0);
}

double edge_reference(double a, double b) {
  return testing::reference_chebyshev(
      [a, b](double v) { return std::acos(a * v / std::sqrt(a * a * v * v + b * b)); }, -1.0,
      1.0);
}

std::vector<std::array<double, 2>> grid(int n, double a_hi, double b_lo, double b_hi) {
  std::vector<std::array<double, 2>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.push_back({a_hi * i / (n - 1), b_lo + (b_hi - b_lo) * j / (n - 1)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("geometry validation") {
  CHECK_NOTHROW(CylinderGeom(0.0, 1e-8));
  CHECK_THROWS_AS(CylinderGeom(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(CylinderGeom(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(CylinderGeom(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(CylinderGeom(std::nan(""), 1.0), DomainError);
  CHECK_THROWS_AS(CylinderGeom(1.0, INFINITY), DomainError);
}

TEST_CASE("cyl_volume") {
  CHECK(cyl_volume({0.0, 1.0}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(cyl_volume({5.0, 1.0}) == cyl_volume({0.0, 1.0}));
  CHECK(cyl_volume({1.0, 2.0}) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("cyl_area") {
  for (double b : {1e-8, 0.1, 1.0, 7.0}) {
    CAPTURE(b);
    const auto ar = cyl_area({0.0, b});
    CHECK(rel_err(ar.total, 2.0 * kPi + 2.0 * kPi * b) < 1e-15);
  }
  const auto ar34 = cyl_area({3.0, 4.0});
  CHECK(rel_err(ar34.total, 2.0 * (kPi + 10.0 * ellip_e(9.0 / 25.0))) < 1e-15);
  CHECK(rel_err(ar34.total, 34.64485319615407110828115) < 1e-14);
  CHECK(rel_err(ar34.total, 2.0 * kPi + lateral_reference(3.0, 4.0)) < 1e-12);
  CHECK(ar34.total - ar34.lateral == doctest::Approx(2.0 * kPi).epsilon(1e-14));

  const auto ar11 = cyl_area({1.0, 1.0});
  CHECK(rel_err(ar11.lateral, 4.0 * std::sqrt(2.0) * ellip_e(0.5)) < 1e-15);
  CHECK(rel_err(ar11.lateral, lateral_reference(1.0, 1.0)) < 1e-10);
}

TEST_CASE("cyl_imc") {
  CHECK(cyl_imc({0.0, 1.0}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(cyl_imc({3.0, 4.0}) == doctest::Approx(5.0 * kPi).epsilon(1e-15));
  for (auto [a, b] : grid(5, 5.0, 0.1, 5.0)) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_err(cyl_imc({a, b}), imc_reference(a, b)) < 1e-11);
  }
}

TEST_CASE("cyl_edge_term") {
  const double total = 2.0 * kPi * kPi;
  CHECK(cyl_edge_term({0.0, 1.0}) == doctest::Approx(total).epsilon(1e-15));
  CHECK(cyl_edge_term({2.0, 1.0}) == doctest::Approx(total).epsilon(1e-15));
  CHECK(cyl_edge_term({10.0, 0.1}) == doctest::Approx(total).epsilon(1e-15));
  // One semicircular edge integrates the dihedral angle to pi^2 / 2.
  for (auto [a, b] : {std::array{0.0, 1.0}, {2.0, 1.0}, {10.0, 0.1}}) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_err(edge_reference(a, b), kPi * kPi / 2.0) < 1e-11);
  }
}

TEST_CASE("cyl_mean_width") {
  for (double b : {0.01, 0.5, 1.0, 2.0, 10.0}) {
    CAPTURE(b);
    CHECK(rel_err(cyl_mean_width({0.0, b}), (b + kPi) / 2.0) < 1e-15);
  }
  CHECK(rel_err(cyl_mean_width({3.0, 4.0}), (5.0 + kPi) / 2.0) < 1e-15);
}

TEST_CASE("cyl_section_ellipse") {
  const auto round = cyl_section_ellipse({0.0, 1.0});
  CHECK(round.semi_major == 1.0);
  CHECK(round.semi_minor == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(round.ecc_sq == 0.0);
  CHECK(round.circumference == doctest::Approx(2.0 * kPi).epsilon(1e-15));

  const auto e34 = cyl_section_ellipse({3.0, 4.0});
  CHECK(e34.semi_major == 1.0);
  CHECK(e34.semi_minor == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(e34.ecc_sq == doctest::Approx(9.0 / 25.0).epsilon(1e-15));
  CHECK(rel_err(e34.circumference, 4.0 * ellip_e(9.0 / 25.0)) < 1e-15);

  const auto e11 = cyl_section_ellipse({1.0, 1.0});
  CHECK(e11.semi_minor == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rel_err(std::sqrt(2.0) * e11.circumference, cyl_area({1.0, 1.0}).lateral) < 1e-12);
}

TEST_CASE("cyl_measures are consistent with the individual operations") {
  const CylinderGeom g(1.5, 0.7);
  const auto m = cyl_measures(g);
  CHECK(m.volume == cyl_volume(g));
  CHECK(m.area_lateral == cyl_area(g).lateral);
  CHECK(m.area_total == cyl_area(g).total);
  CHECK(m.integrated_mean_curvature == cyl_imc(g));
  CHECK(m.edge_term == cyl_edge_term(g));
  CHECK(m.mean_width == cyl_mean_width(g));
  CHECK(m.volume > 0.0);
  CHECK(m.area_lateral > 0.0);
}

TEST_CASE("assemble_mean_width") {
  CHECK(assemble_mean_width(0.0, {}) == 0.0);
  const double q = kPi * kPi / 2.0;
  const std::array<double, 4> edges{q, q, q, q};
  CHECK(rel_err(assemble_mean_width(kPi * std::sqrt(2.0), edges),
                0.5 * (std::sqrt(2.0) + kPi)) < 1e-15);
  const std::array<double, 1> negative{-1.0};
  CHECK_THROWS_AS(assemble_mean_width(1.0, negative), DomainError);
  CHECK_THROWS_AS(assemble_mean_width(-1.0, {}), DomainError);
}

TEST_CASE("mean width assembly identity on a 10 x 10 grid") {
  for (auto [a, b] : grid(10, 5.0, 0.1, 5.0)) {
    const CylinderGeom g(a, b);
    const double assembled = cyl_imc(g) / (2.0 * kPi) + cyl_edge_term(g) / (4.0 * kPi);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_err(cyl_mean_width(g), assembled) < 1e-14);
  }
}

TEST_CASE("lateral area against the double integral and the element-length identity") {
  for (auto [a, b] : grid(6, 5.0, 0.1, 5.0)) {
    const CylinderGeom g(a, b);
    const double lateral = cyl_area(g).lateral;
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_err(lateral, lateral_reference(a, b)) < 1e-10);
    CHECK(rel_err(lateral, std::hypot(a, b) * 4.0 * ellip_e(a * a / (a * a + b * b))) < 1e-13);
  }
}

TEST_CASE("area, imc and mean width increase with b") {
  for (double a : {0.0, 0.5, 2.0, 5.0}) {
    double prev_area = 0.0, prev_imc = 0.0, prev_mw = 0.0;
    for (int j = 0; j <= 40; ++j) {
      const CylinderGeom g(a, 0.05 + 0.125 * j);
      CAPTURE(a);
      CAPTURE(g.b());
      CHECK(cyl_area(g).total > prev_area);
      CHECK(cyl_imc(g) > prev_imc);
      CHECK(cyl_mean_width(g) > prev_mw);
      prev_area = cyl_area(g).total;
      prev_imc = cyl_imc(g);
      prev_mw = cyl_mean_width(g);
    }
  }
}

TEST_CASE("tiny heights stay finite") {
  for (double a : {0.0, 1.0, 4.0}) {
    const CylinderGeom g(a, 1e-8);
    const auto m = cyl_measures(g);
    CAPTURE(a);
    CHECK(std::isfinite(m.area_total));
    CHECK(std::isfinite(m.mean_width));
    CHECK(m.area_lateral > 0.0);
  }
  // b -> 0 with a fixed: lateral area tends to 4a (a flattened sleeve).
  CHECK(cyl_area({2.0, 1e-8}).lateral == doctest::Approx(8.0).epsilon(1e-7));
}
