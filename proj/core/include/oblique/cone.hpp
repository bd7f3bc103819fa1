#pragma once

#include <complex>

#include "oblique/geometry.hpp"

namespace oblique {

/// Auxiliary quantities of the oblique cone area formula.
struct ConeAuxiliaries {
  double s0;  // sqrt((1 - a)^2 + b^2), distance from apex to (0, 1, 0)
  double s1;  // sqrt((1 + a)^2 + b^2), distance from apex to (0, -1, 0)
  double c0;  // elliptic parameter, 0 <= c0 < 1
  double c1;  // characteristic, c1 <= 0
  double c0_complement;  // 1 - c0, formed without cancellation
};

struct ConeArea {
  double lateral;
  double total;
};

ConeAuxiliaries cone_auxiliaries(const ConeGeom& g);

double cone_volume(const ConeGeom& g);

/// total = pi + 2 sqrt(s0 s1) [E(c0) - K(c0) + (1 - c1) Pi(c1, c0)].
ConeArea cone_area(const ConeGeom& g);

/// pi/2 (sqrt(a^2 + (b - i)^2) + sqrt(a^2 + (b + i)^2)) with principal
/// branches, before the imaginary part is discarded.
std::complex<double> cone_imc_complex(const ConeGeom& g);

/// int alpha ds over ONE semicircular half of the base rim:
/// pi/2 [pi + i ln(b - i + sqrt(a^2 + (b - i)^2)) - i ln(b + i + sqrt(a^2 + (b + i)^2))]
/// with principal branches (cuts on the negative real axis).
std::complex<double> cone_semicircle_edge_complex(const ConeGeom& g);

/// Real part of cone_imc_complex. Throws InternalError if the imaginary
/// residue exceeds 1e-10 (relative to max(1, |value|)).
double cone_imc(const ConeGeom& g);

/// Full base rim: twice the semicircle integral.
double cone_edge_term(const ConeGeom& g);

/// cone_imc / (2 pi) + cone_edge_term / (4 pi). For a = 0 this reduces to
/// (b + pi)/2 - arctan(b)/2.
double cone_mean_width(const ConeGeom& g);

BodyMeasures cone_measures(const ConeGeom& g);

namespace detail {
/// Discards a conjugate-pair imaginary residue, checking it is negligible.
double real_part_checked(std::complex<double> z, const char* what);
}  // namespace detail

}  // namespace oblique
