#include <array>
#include <cmath>

#include "doctest.h"
#include "oblique/cone.hpp"
#include "oblique/errors.hpp"
#include "oblique/halfcone.hpp"
#include "oblique/oracle.hpp"
#include "oblique/trig.hpp"
#include "support/oracles.hpp"

using namespace oblique;
using oblique::testing::kPi;
using oblique::testing::rel_err;

namespace {

constexpr std::array kSides{HalfSide::smaller, HalfSide::larger};

double j_reference(double a, double b, HalfSide side) {
  const double lo = side == HalfSide::smaller ? 0.0 : -1.0;
  const double hi = side == HalfSide::smaller ? 1.0 : 0.0;
  return testing::reference_chebyshev(
      [a, b](double v) {
        return (1.0 + a * a + b * b - 2.0 * a * v) * b / ((1.0 - a * v) * (1.0 - a * v) + b * b);
      },
      lo, hi, a > 1.0 ? 1.0 / a : std::nan(""));
}

}  // namespace

TEST_CASE("HalfSide names") {
  CHECK(to_string(HalfSide::smaller) == "smaller");
  CHECK(to_string(HalfSide::larger) == "larger");
}

TEST_CASE("triangle face and legs") {
  CHECK(triangle_area({3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(leg_length({2.0, 2.0}) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("half_ar_lateral") {
  for (double b : {0.1, 1.0, 5.0}) {
    const ConeGeom g(0.0, b);
    CAPTURE(b);
    for (auto side : kSides) {
      CHECK(rel_err(half_ar_lateral(g, side), kPi * std::sqrt(1.0 + b * b) / 2.0) < 1e-12);
    }
  }
  const ConeGeom g11(1.0, 1.0);
  CHECK(rel_err(half_ar_lateral(g11, HalfSide::smaller) + half_ar_lateral(g11, HalfSide::larger),
                cone_area(g11).lateral) < 1e-10);
  // b -> 0: the integrand tends to (1 - 2v) / sqrt(1 - v^2) on [-1, 0].
  CHECK(half_ar_lateral({2.0, 1e-4}, HalfSide::larger) == doctest::Approx(kPi / 2.0 + 2.0).epsilon(1e-7));
}

TEST_CASE("half_j") {
  for (double b : {0.3, 1.0, 4.0}) {
    const ConeGeom g(0.0, b);
    CAPTURE(b);
    CHECK(rel_err(half_j(g, HalfSide::larger), cone_imc(g) / 2.0) < 1e-13);
    CHECK(rel_err(half_j(g, HalfSide::smaller), cone_imc(g) / 2.0) < 1e-13);
  }
  const ConeGeom thin(2.0, 1e-5);
  CHECK(half_j(thin, HalfSide::smaller) == doctest::Approx(kPi * std::sqrt(3.0)).epsilon(1e-4));
  CHECK(std::abs(half_j(thin, HalfSide::larger)) < 1e-4);

  for (auto [a, b] : {std::array{0.5, 0.5}, {1.0, 1.0}, {1.5, 0.8}, {3.0, 0.05}, {2.0, 3.0}}) {
    const ConeGeom g(a, b);
    CAPTURE(a);
    CAPTURE(b);
    for (auto side : kSides) {
      CAPTURE(to_string(side));
      CHECK(rel_err(half_j(g, side), half_j_quadrature(g, side)) < 1e-10);
      CHECK(rel_err(half_j(g, side), j_reference(a, b, side)) < 1e-10);
      CHECK(half_j(g, side) >= 0.0);
    }
    const auto j0 = half_j_larger_complex(g);
    CHECK(std::abs(j0.imag()) <= 1e-12 * std::max(1.0, std::abs(j0.real())));
  }
}

TEST_CASE("the independent J1 closed form agrees with sum minus J0") {
  for (int i = 0; i <= 8; ++i) {
    for (double b : {0.02, 0.4, 1.0, 3.0}) {
      const ConeGeom g(0.5 * i, b);
      const auto j1 = half_j_smaller_complex(g);
      CAPTURE(g.a());
      CAPTURE(b);
      CHECK(std::abs(j1.imag()) <= 1e-12 * std::max(1.0, std::abs(j1.real())));
      CHECK(rel_err(j1.real(), half_j(g, HalfSide::smaller)) < 1e-12);
    }
  }
}

TEST_CASE("half_l") {
  const ConeGeom right(0.0, 1.0);
  for (auto side : kSides) {
    CHECK(rel_err(half_l(right, side), kPi * std::acos(-1.0 / std::sqrt(2.0))) < 1e-13);
  }
  const ConeGeom thin(2.0, 1e-5);
  CHECK(std::abs(half_l(thin, HalfSide::larger) - kPi * kPi) < 1e-3);
  CHECK(std::abs(half_l(thin, HalfSide::smaller) - kPi * kPi / 3.0) < 1e-3);
  CHECK(std::abs(half_l(thin, HalfSide::smaller) - 2.0 * kPi * arccsc(2.0)) < 1e-3);
}

TEST_CASE("half_dihedral_angles") {
  for (double b : {0.1, 1.0, 10.0}) {
    for (auto side : kSides) {
      const auto ang = half_dihedral_angles({0.0, b}, side);
      CHECK(ang.base == doctest::Approx(kPi / 2.0).epsilon(1e-15));
      CHECK(ang.leg == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    }
  }
  const auto s11 = half_dihedral_angles({1.0, 1.0}, HalfSide::smaller);
  CHECK(s11.base == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-15));
  CHECK(s11.leg == doctest::Approx(kPi / 3.0).epsilon(1e-15));

  // The arccos forms, where they are well conditioned.
  for (auto [a, b] : {std::array{0.7, 1.3}, {2.0, 0.5}, {4.0, 4.0}}) {
    const double r = std::hypot(a, b);
    const auto s = half_dihedral_angles({a, b}, HalfSide::smaller);
    const auto l = half_dihedral_angles({a, b}, HalfSide::larger);
    CHECK(s.base == doctest::Approx(kPi - std::acos(a / r)).epsilon(1e-14));
    CHECK(s.leg == doctest::Approx(std::acos(a / (std::sqrt(1.0 + b * b) * r))).epsilon(1e-14));
    CHECK(l.base == doctest::Approx(std::acos(a / r)).epsilon(1e-14));
    CHECK(l.leg ==
          doctest::Approx(kPi - std::acos(a / (std::sqrt(1.0 + b * b) * r))).epsilon(1e-14));
  }
}

TEST_CASE("half_mean_width") {
  for (double b : {0.2, 1.0, 3.0}) {
    const ConeGeom g(0.0, b);
    CHECK(rel_err(half_mean_width(g, HalfSide::smaller), half_mean_width(g, HalfSide::larger)) <
          1e-12);
  }
  const ConeGeom g(1.3638337555895594, 1e-4);
  const double ratio = half_mean_width(g, HalfSide::smaller) / half_mean_width(g, HalfSide::larger);
  CHECK(std::abs(ratio - 0.8431) < 5e-4);
}

TEST_CASE("half mean widths against the support-function oracle") {
  const ConeGeom g(1.5, 0.8);
  for (auto side : kSides) {
    const auto est = mw_oracle({HullKind::halfcone, 1.5, 0.8, side}, MonteCarlo{1'000'000, 7});
    const double closed = half_mean_width(g, side);
    CAPTURE(to_string(side));
    CAPTURE(est.value);
    CAPTURE(est.error);
    CHECK(std::abs(est.value - closed) < 1e-3);
    CHECK(std::abs(est.value - closed) < 4.0 * est.error);
  }
  // The side pairing: the swapped assignment is far from the oracle.
  const auto smaller = mw_oracle({HullKind::halfcone, 1.5, 0.8, HalfSide::smaller}, LatLongGrid{512, 1024});
  const double swapped = half_mean_width(g, HalfSide::larger);
  const double direct = half_mean_width(g, HalfSide::smaller);
  MESSAGE("smaller-side oracle " << smaller.value << ", paired " << direct << ", swapped "
                                 << swapped);
  CHECK(std::abs(smaller.value - direct) < 1e-6);
  CHECK(std::abs(smaller.value - swapped) > 1e-2);
}

TEST_CASE("half_measures and half_ratios") {
  const ConeGeom g(1.7, 0.6);
  const auto s = half_measures(g, HalfSide::smaller);
  const auto l = half_measures(g, HalfSide::larger);
  CHECK(s.side == HalfSide::smaller);
  CHECK(l.side == HalfSide::larger);
  CHECK(s.ar_with_base == doctest::Approx(s.ar_lateral + kPi / 2.0).epsilon(1e-15));
  CHECK(s.ar_with_base_and_triangle ==
        doctest::Approx(s.ar_with_base + std::hypot(1.7, 0.6)).epsilon(1e-15));
  CHECK(s.mean_width == doctest::Approx(half_mean_width(g, HalfSide::smaller)).epsilon(1e-15));
  CHECK(!s.near_singular);
  for (const auto& m : {s, l}) {
    CHECK(m.j >= 0.0);
    CHECK(m.l >= 0.0);
    CHECK(m.base_angle > 0.0);
    CHECK(m.base_angle < kPi);
    CHECK(m.leg_angle > 0.0);
    CHECK(m.leg_angle < kPi);
  }
  const auto r = half_ratios(g);
  CHECK(r.ar_lateral == doctest::Approx(s.ar_lateral / l.ar_lateral).epsilon(1e-15));
  CHECK(r.ar_total == doctest::Approx(s.ar_with_base / l.ar_with_base).epsilon(1e-15));
  CHECK(r.ar_addendum ==
        doctest::Approx(s.ar_with_base_and_triangle / l.ar_with_base_and_triangle).epsilon(1e-15));
  CHECK(r.mean_width == doctest::Approx(s.mean_width / l.mean_width).epsilon(1e-15));

  CHECK(near_singular({2.0, 1e-7}));
  CHECK(!near_singular({0.5, 1e-7}));
  CHECK(!near_singular({2.0, 1e-6}));
  CHECK(half_measures({2.0, 1e-7}, HalfSide::larger).near_singular);
}

TEST_CASE("additivity over the two sides") {
  for (auto [a, b] : {std::array{0.3, 0.2}, {1.0, 1.0}, {1.5, 0.05}, {2.5, 2.0}, {4.0, 0.5}}) {
    const ConeGeom g(a, b);
    CAPTURE(a);
    CAPTURE(b);
    const double lat =
        half_ar_lateral(g, HalfSide::smaller) + half_ar_lateral(g, HalfSide::larger);
    CHECK(rel_err(lat, cone_area(g).lateral) < 1e-10);
    CHECK(rel_err(half_j(g, HalfSide::smaller) + half_j(g, HalfSide::larger), cone_imc(g)) <
          1e-12);
    CHECK(rel_err(half_l(g, HalfSide::smaller) + half_l(g, HalfSide::larger),
                  cone_edge_term(g)) < 1e-10);
  }
}

TEST_CASE("dihedral angles of the two sides are supplementary") {
  for (double a : {0.0, 0.4, 1.0, 3.0, 50.0}) {
    for (double b : {1e-6, 0.3, 2.0, 100.0}) {
      const auto s = half_dihedral_angles({a, b}, HalfSide::smaller);
      const auto l = half_dihedral_angles({a, b}, HalfSide::larger);
      CHECK(std::abs(s.base + l.base - kPi) <= 1e-14);
      CHECK(std::abs(s.leg + l.leg - kPi) <= 1e-14);
    }
  }
}

TEST_CASE("ratio limits: end points, domain and stated forms") {
  const double a1 = 1.0 + 1e-12;
  CHECK(ratio_ar_lateral_limit(a1) == doctest::Approx((kPi - 2.0) / (kPi + 2.0)).epsilon(1e-5));
  CHECK(ratio_ar_total_limit(a1) == doctest::Approx((kPi - 1.0) / (kPi + 1.0)).epsilon(1e-5));
  CHECK(ratio_ar_addendum_limit(a1) == doctest::Approx(kPi / (kPi + 2.0)).epsilon(1e-5));
  CHECK(ratio_mw_limit(a1) ==
        doctest::Approx((kPi / 4.0 + 0.5) / (kPi / 4.0 + std::sqrt(2.0) / 2.0)).epsilon(1e-5));
  for (double bad : {1.0, 0.5, 0.0, -2.0, std::nan("")}) {
    CHECK_THROWS_AS(ratio_ar_lateral_limit(bad), DomainError);
    CHECK_THROWS_AS(ratio_ar_total_limit(bad), DomainError);
    CHECK_THROWS_AS(ratio_ar_addendum_limit(bad), DomainError);
    CHECK_THROWS_AS(ratio_mw_limit(bad), DomainError);
  }
}

TEST_CASE("arcsec and arccsc forms of the lateral limit coincide") {
  for (double a = 1.01; a < 10.0; a += 0.37) {
    CAPTURE(a);
    CHECK(std::abs(arcsec(a) + arccsc(a) - kPi / 2.0) < 1e-15);
    const double with_arccsc =
        (kPi - 2.0 * a + 4.0 * std::sqrt(a * a - 1.0) - 4.0 * (kPi / 2.0 - arccsc(a))) /
        (kPi + 2.0 * a);
    CHECK(std::abs(ratio_ar_lateral_limit(a) - with_arccsc) < 1e-14);
  }
  CHECK_THROWS_AS(arcsec(0.5), DomainError);
  CHECK_THROWS_AS(arccsc(0.5), DomainError);
}

TEST_CASE("ratio limits lie in (0, 1) and vary continuously on (1, 10]") {
  double prev[4] = {ratio_ar_lateral_limit(1.001), ratio_ar_total_limit(1.001),
                    ratio_ar_addendum_limit(1.001), ratio_mw_limit(1.001)};
  for (int i = 1; i <= 9000; ++i) {
    const double a = 1.001 + i * 1e-3;
    const double cur[4] = {ratio_ar_lateral_limit(a), ratio_ar_total_limit(a),
                           ratio_ar_addendum_limit(a), ratio_mw_limit(a)};
    for (int k = 0; k < 4; ++k) {
      CAPTURE(a);
      CAPTURE(k);
      CHECK(cur[k] > 0.0);
      CHECK(cur[k] < 1.0);
      CHECK(std::abs(cur[k] - prev[k]) < 5e-3);
      prev[k] = cur[k];
    }
  }
}

TEST_CASE("analytic limits match the ratios at b = 1e-6") {
  const double b = 1e-6;
  for (double a : {1.2, 1.5, 2.0, 3.0}) {
    const ConeGeom g(a, b);
    const auto r = half_ratios(g);
    CAPTURE(a);
    CHECK(std::abs(r.ar_lateral - ratio_ar_lateral_limit(a)) < 1e-3);
    CHECK(std::abs(r.ar_total - ratio_ar_total_limit(a)) < 1e-3);
    CHECK(std::abs(r.ar_addendum - ratio_ar_addendum_limit(a)) < 1e-3);
    CHECK(std::abs(r.mean_width - ratio_mw_limit(a)) < 1e-3);
    CHECK(std::abs(half_j(g, HalfSide::smaller) - kPi * std::sqrt(a * a - 1.0)) < 1e-3);
    CHECK(std::abs(half_j(g, HalfSide::larger)) < 1e-3);
    CHECK(std::abs(half_l(g, HalfSide::larger) - kPi * kPi) < 1e-3);
    CHECK(std::abs(half_l(g, HalfSide::smaller) - 2.0 * kPi * arccsc(a)) < 1e-3);
  }
}

TEST_CASE("the two half-cones have equal volume") {
  for (auto [a, b] : {std::array{1.5, 1.0}, {0.5, 2.0}}) {
    const auto vs = volume_mc({HullKind::halfcone, a, b, HalfSide::smaller}, 1'000'000, 11);
    const auto vl = volume_mc({HullKind::halfcone, a, b, HalfSide::larger}, 1'000'000, 12);
    CAPTURE(a);
    CAPTURE(vs.value);
    CAPTURE(vl.value);
    CHECK(std::abs(vs.value - vl.value) < 3.0 * std::hypot(vs.error, vl.error));
    CHECK(std::abs(vs.value + vl.value - kPi * b / 3.0) <
          3.0 * std::hypot(vs.error, vl.error));
  }
}
