#include "oblique/cone.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oblique/elliptic.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

namespace detail {

double real_part_checked(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z.real()))) {
    throw InternalError(std::string(what) + ": imaginary residue " +
                        std::to_string(z.imag()));
  }
  return z.real();
}

}  // namespace detail

ConeAuxiliaries cone_auxiliaries(const ConeGeom& g) {
  const double a = g.a();
  const double b = g.b();
  const double s0 = std::hypot(1.0 - a, b);
  const double s1 = std::hypot(1.0 + a, b);
  const double p = s0 * s1;
  const double n0 = 1.0 - a * a + b * b;
  const double n1 = 1.0 + a * a + b * b;
  // p^2 - n0^2 = 4 a^2 b^2 and p^2 - n1^2 = -4 a^2.
  const double ab4 = 4.0 * a * a * b * b;
  double p_minus_n0;
  double p_plus_n0;
  if (n0 >= 0.0) {
    p_plus_n0 = p + n0;
    p_minus_n0 = ab4 / p_plus_n0;
  } else {
    p_minus_n0 = p - n0;
    p_plus_n0 = ab4 / p_minus_n0;
  }
  const double c0 = p_minus_n0 / (2.0 * p);
  const double c0_complement = p_plus_n0 / (2.0 * p);
  const double c1 = -2.0 * a * a / (p * (p + n1));
  return {s0, s1, c0, c1, c0_complement};
}

double cone_volume(const ConeGeom& g) { return kPi * g.b() / 3.0; }

ConeArea cone_area(const ConeGeom& g) {
  const auto aux = cone_auxiliaries(g);
  const double mc = aux.c0_complement;
  // E - K is small when c0 is, but only in absolute terms against the pi/2
  // carried by Pi, so the bracket is evaluated directly.
  const double bracket = ellip_e_mc(aux.c0, mc) - ellip_k_mc(aux.c0, mc) +
                         (1.0 - aux.c1) * ellip_pi_mc(aux.c1, aux.c0, mc);
  const double lateral = 2.0 * std::sqrt(aux.s0 * aux.s1) * bracket;
  return {lateral, lateral + kPi};
}

std::complex<double> cone_imc_complex(const ConeGeom& g) {
  const double a = g.a();
  const double b = g.b();
  const auto minus = std::sqrt(a * a + (b - kI) * (b - kI));
  const auto plus = std::sqrt(a * a + (b + kI) * (b + kI));
  return 0.5 * (minus + plus) * kPi;
}

std::complex<double> cone_semicircle_edge_complex(const ConeGeom& g) {
  const double a = g.a();
  const double b = g.b();
  const auto root_minus = std::sqrt(a * a + (b - kI) * (b - kI));
  const auto root_plus = std::sqrt(a * a + (b + kI) * (b + kI));
  const auto bracket = kPi + kI * std::log(b - kI + root_minus) -
                       kI * std::log(b + kI + root_plus);
  return 0.5 * bracket * kPi;
}

double cone_imc(const ConeGeom& g) {
  return detail::real_part_checked(cone_imc_complex(g), "cone_imc");
}

double cone_edge_term(const ConeGeom& g) {
  return 2.0 * detail::real_part_checked(cone_semicircle_edge_complex(g), "cone_edge_term");
}

double cone_mean_width(const ConeGeom& g) {
  const double half = 0.5 * cone_edge_term(g);
  const std::array<double, 2> edges{half, half};
  return assemble_mean_width(cone_imc(g), edges);
}

BodyMeasures cone_measures(const ConeGeom& g) {
  const auto area = cone_area(g);
  return {cone_volume(g), area.lateral, area.total, cone_imc(g), cone_edge_term(g),
          cone_mean_width(g)};
}

}  // namespace oblique
