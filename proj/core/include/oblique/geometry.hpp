#pragma once

#include <cmath>
#include <span>
#include <string>

#include "oblique/errors.hpp"

namespace oblique {

namespace detail {

inline void require_geometry(double a, double b, const char* body) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(std::string(body) + ": a and b must be finite");
  }
  if (a < 0.0) throw DomainError(std::string(body) + ": a must be >= 0");
  if (b <= 0.0) throw DomainError(std::string(body) + ": b must be > 0");
}

}  // namespace detail

/// Convex hull of the unit disk {x^2 + y^2 <= 1, z = 0} and its translate
/// centred at (0, a, b). Unit radius is fixed; to model radius r, pass a/r and
/// b/r and rescale lengths by r, areas by r^2 and volume by r^3.
class CylinderGeom {
 public:
  CylinderGeom(double a, double b) : a_(a), b_(b) {
    detail::require_geometry(a, b, "cylinder");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// Convex hull of the unit disk at z = 0 and the apex (0, a, b).
class ConeGeom {
 public:
  ConeGeom(double a, double b) : a_(a), b_(b) {
    detail::require_geometry(a, b, "cone");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// Volume, surface areas and mean width of one convex body, together with
/// the two curvature integrals the mean width is assembled from.
struct BodyMeasures {
  double volume = 0.0;
  double area_lateral = 0.0;
  double area_total = 0.0;
  double integrated_mean_curvature = 0.0;  // integral of H dS over the curved part
  double edge_term = 0.0;                  // sum over edges of integral alpha ds
  double mean_width = 0.0;
};

}  // namespace oblique

namespace oblique {

/// Mean width from the curvature integrals of a piecewise smooth convex body:
/// imc / (2 pi) + (sum of edge integrals of the exterior dihedral angle) / (4 pi).
/// Vertices contribute nothing. Negative inputs are rejected.
double assemble_mean_width(double imc, std::span<const double> edge_contributions);

}  // namespace oblique
