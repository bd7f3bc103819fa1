#include "oblique/halfcone.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "oblique/cone.hpp"
#include "oblique/quadrature.hpp"
#include "oblique/trig.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

struct Range {
  double lo;
  double hi;
};

Range v_range(HalfSide side) {
  return side == HalfSide::smaller ? Range{0.0, 1.0} : Range{-1.0, 0.0};
}

// v = 1/a is where the rim point sits directly "under" the apex direction;
// the integrands develop a layer of width ~b there.
std::vector<double> breakpoints(const ConeGeom& g) {
  if (g.a() > 1.0) return {1.0 / g.a()};
  return {};
}

void require_limit_domain(double a, const char* fn) {
  if (!std::isfinite(a) || !(a > 1.0)) {
    throw DomainError(std::string(fn) + ": requires a > 1");
  }
}

}  // namespace

std::string_view to_string(HalfSide side) {
  return side == HalfSide::smaller ? "smaller" : "larger";
}

bool near_singular(const ConeGeom& g) { return g.a() > 1.0 && g.b() < 1e-6; }

double triangle_area(const ConeGeom& g) { return std::hypot(g.a(), g.b()); }

double leg_length(const ConeGeom& g) {
  return std::sqrt(g.a() * g.a() + g.b() * g.b() + 1.0);
}

double half_ar_lateral(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol) {
  const double a = g.a();
  const double b = g.b();
  const auto [lo, hi] = v_range(side);
  return integrate_chebyshev([a, b](double v) { return std::hypot(1.0 - a * v, b); }, lo, hi,
                             breakpoints(g), tol);
}

std::complex<double> half_j_larger_complex(const ConeGeom& g) {
  const double a = g.a();
  const double b = g.b();
  const auto r_minus = std::sqrt(a * a + (b - kI) * (b - kI));
  const auto r_plus = std::sqrt(a * a + (b + kI) * (b + kI));
  const auto first = r_minus * (kI * kPi / 2.0 - std::log(kI - b) + std::log(a + r_minus));
  const auto second = r_plus * (kI * kPi / 2.0 + std::log(-kI - b) - std::log(a + r_plus));
  return kI / 2.0 * (first + second);
}

std::complex<double> half_j_smaller_complex(const ConeGeom& g) {
  const double a = g.a();
  const double b = g.b();
  const auto r_minus = std::sqrt(a * a + (b - kI) * (b - kI));
  const auto r_plus = std::sqrt(a * a + (b + kI) * (b + kI));
  const auto first =
      r_minus * (-3.0 * kI * kPi / 2.0 + std::log(kI - b) - std::log(a + r_minus));
  const auto second =
      r_plus * (-3.0 * kI * kPi / 2.0 - std::log(-kI - b) + std::log(a + r_plus));
  return kI / 2.0 * (first + second);
}

double half_j(const ConeGeom& g, HalfSide side) {
  const double j0 = detail::real_part_checked(half_j_larger_complex(g), "half_j");
  if (side == HalfSide::larger) return j0;
  return cone_imc(g) - j0;
}

double half_j_quadrature(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol) {
  const double a = g.a();
  const double b = g.b();
  const auto [lo, hi] = v_range(side);
  // (1 + a^2 + b^2 - 2 a v) b / ((1 - a v)^2 + b^2)
  //   = b + a^2 b (1 - v^2) / ((1 - a v)^2 + b^2)
  auto g_reg = [a, b](double v) {
    const double w = 1.0 - a * v;
    return b + a * a * b * (1.0 - v) * (1.0 + v) / (w * w + b * b);
  };
  return integrate_chebyshev(g_reg, lo, hi, breakpoints(g), tol);
}

double half_l(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol) {
  const double a = g.a();
  const double b = g.b();
  const auto [lo, hi] = v_range(side);
  // arccos((a v - 1) / sqrt((1 - a v)^2 + b^2)) == atan2(b, a v - 1)
  return 2.0 * integrate_chebyshev([a, b](double v) { return std::atan2(b, a * v - 1.0); }, lo,
                                   hi, breakpoints(g), tol);
}

DihedralAngles half_dihedral_angles(const ConeGeom& g, HalfSide side) {
  const double a = g.a();
  const double b = g.b();
  // arccos(a / sqrt(a^2 + b^2)) and arccos(a / (sqrt(1 + b^2) sqrt(a^2 + b^2)))
  const double base = std::atan2(b, a);
  const double leg = std::atan2(b * std::sqrt(1.0 + a * a + b * b), a);
  if (side == HalfSide::smaller) return {kPi - base, leg};
  return {base, kPi - leg};
}

double half_mean_width(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol) {
  const auto angles = half_dihedral_angles(g, side);
  const std::array<double, 3> edges{half_l(g, side, tol), 2.0 * angles.base,
                                    2.0 * leg_length(g) * angles.leg};
  return assemble_mean_width(half_j(g, side), edges);
}

HalfConeMeasures half_measures(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol) {
  HalfConeMeasures m;
  m.side = side;
  m.j = half_j(g, side);
  m.l = half_l(g, side, tol);
  const auto angles = half_dihedral_angles(g, side);
  m.base_angle = angles.base;
  m.leg_angle = angles.leg;
  m.ar_lateral = half_ar_lateral(g, side, tol);
  m.ar_with_base = m.ar_lateral + kPi / 2.0;
  m.ar_with_base_and_triangle = m.ar_with_base + triangle_area(g);
  const std::array<double, 3> edges{m.l, 2.0 * angles.base, 2.0 * leg_length(g) * angles.leg};
  m.mean_width = assemble_mean_width(m.j, edges);
  m.near_singular = near_singular(g);
  return m;
}

HalfConeRatios half_ratios(const ConeGeom& g, const ToleranceConfig& tol) {
  const auto s = half_measures(g, HalfSide::smaller, tol);
  const auto l = half_measures(g, HalfSide::larger, tol);
  return {s.ar_lateral / l.ar_lateral, s.ar_with_base / l.ar_with_base,
          s.ar_with_base_and_triangle / l.ar_with_base_and_triangle,
          s.mean_width / l.mean_width};
}

double ratio_ar_lateral_limit(double a) {
  require_limit_domain(a, "ratio_ar_lateral_limit");
  return (kPi - 2.0 * a + 4.0 * std::sqrt(a * a - 1.0) - 4.0 * arcsec(a)) / (kPi + 2.0 * a);
}

double ratio_ar_total_limit(double a) {
  require_limit_domain(a, "ratio_ar_total_limit");
  return (-a + 2.0 * std::sqrt(a * a - 1.0) + 2.0 * arccsc(a)) / (kPi + a);
}

double ratio_ar_addendum_limit(double a) {
  require_limit_domain(a, "ratio_ar_addendum_limit");
  return (2.0 * std::sqrt(a * a - 1.0) + 2.0 * arccsc(a)) / (kPi + 2.0 * a);
}

double ratio_mw_limit(double a) {
  require_limit_domain(a, "ratio_mw_limit");
  return (0.5 * std::sqrt(a * a - 1.0) + 0.5 * arccsc(a) + 0.5) /
         (kPi / 4.0 + 0.5 * std::sqrt(a * a + 1.0));
}

}  // namespace oblique
