#pragma once

#include <complex>
#include <string_view>

#include "oblique/geometry.hpp"
#include "oblique/tolerance.hpp"

namespace oblique {

// The cone is cut by the plane b y - a z = 0 through the apex and the x-axis
// diameter, whose end points (+-1, 0, 0) are equidistant from the apex; the
// cross-section is an isosceles triangle. On the lateral surface, parametrized
// by v in [-1, 1] along the rim, the cut lies at v = 0.
//
//   smaller: half-disk y >= 0, v in [0, 1], the side the apex leans towards.
//            Exterior normal of the triangle face is (0, -b, a).
//   larger:  half-disk y <= 0, v in [-1, 0]. Exterior normal (0, b, -a).
enum class HalfSide { smaller, larger };

std::string_view to_string(HalfSide side);

struct DihedralAngles {
  double base;  // along the diameter (length 2)
  double leg;   // along each of the two legs (length sqrt(a^2 + b^2 + 1))
};

struct HalfConeMeasures {
  HalfSide side = HalfSide::smaller;
  double j = 0.0;  // integral of H dS over this side's curved part
  double l = 0.0;  // integral of alpha ds over this side's half of the base rim
  double base_angle = 0.0;
  double leg_angle = 0.0;
  double ar_lateral = 0.0;
  double ar_with_base = 0.0;                // + half-disk pi/2
  double ar_with_base_and_triangle = 0.0;  // + triangle sqrt(a^2 + b^2)
  double mean_width = 0.0;
  bool near_singular = false;  // see near_singular()
};

/// Instantaneous smaller/larger ratios at finite b.
struct HalfConeRatios {
  double ar_lateral;
  double ar_total;
  double ar_addendum;
  double mean_width;
};

/// a > 1 and b < 1e-6: the v = 1/a layer is too thin for quadrature-based
/// values to be trusted; use the analytic b -> 0 limits instead.
bool near_singular(const ConeGeom& g);

double triangle_area(const ConeGeom& g);
double leg_length(const ConeGeom& g);

/// int sqrt(((1 - a v)^2 + b^2) / (1 - v^2)) dv over the side's v-range.
double half_ar_lateral(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol = {});

/// J0, the larger side's mean-curvature integral, in closed form with
/// principal branches, before the imaginary part is discarded.
std::complex<double> half_j_larger_complex(const ConeGeom& g);

/// Independent closed form for J1 (the smaller side); only used to cross-check
/// half_j, which obtains J1 as cone_imc - J0.
std::complex<double> half_j_smaller_complex(const ConeGeom& g);

/// Per-side mean-curvature integral. larger: J0 closed form. smaller: total
/// minus J0.
double half_j(const ConeGeom& g, HalfSide side);

/// Direct quadrature of the mean-curvature integrand over the side's v-range.
double half_j_quadrature(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol = {});

/// 2 int arccos((a v - 1) / sqrt((1 - a v)^2 + b^2)) / sqrt(1 - v^2) dv over
/// the side's v-range (both x >= 0 and x <= 0 quarter arcs).
double half_l(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol = {});

DihedralAngles half_dihedral_angles(const ConeGeom& g, HalfSide side);

double half_mean_width(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol = {});

HalfConeMeasures half_measures(const ConeGeom& g, HalfSide side, const ToleranceConfig& tol = {});

HalfConeRatios half_ratios(const ConeGeom& g, const ToleranceConfig& tol = {});

// b -> 0+ limits of the smaller/larger ratios, a > 1.

/// (pi - 2a + 4 sqrt(a^2 - 1) - 4 arcsec(a)) / (pi + 2a)
double ratio_ar_lateral_limit(double a);
/// (-a + 2 sqrt(a^2 - 1) + 2 arccsc(a)) / (pi + a)
double ratio_ar_total_limit(double a);
/// (2 sqrt(a^2 - 1) + 2 arccsc(a)) / (pi + 2a)
double ratio_ar_addendum_limit(double a);
/// (sqrt(a^2 - 1)/2 + arccsc(a)/2 + 1/2) / (pi/4 + sqrt(a^2 + 1)/2)
double ratio_mw_limit(double a);

}  // namespace oblique
