#pragma once

#include "oblique/geometry.hpp"

namespace oblique {

struct CylinderArea {
  double lateral;
  double total;
};

/// Section of the lateral surface by a plane normal to the axis direction
/// (0, a, b).
struct SectionEllipse {
  double semi_major;
  double semi_minor;
  double ecc_sq;
  double circumference;
};

double cyl_volume(const CylinderGeom& g);

/// total = 2 (pi + 2 sqrt(a^2 + b^2) E(a^2 / (a^2 + b^2))), lateral = total - 2 pi.
CylinderArea cyl_area(const CylinderGeom& g);

/// Integral of the mean curvature over the lateral surface: pi sqrt(a^2 + b^2).
double cyl_imc(const CylinderGeom& g);

/// Sum over the four semicircular edges of int alpha ds. Each edge contributes
/// pi^2 / 2 whatever (a, b) is.
double cyl_edge_term(const CylinderGeom& g);

/// (sqrt(a^2 + b^2) + pi) / 2.
double cyl_mean_width(const CylinderGeom& g);

/// The lateral area equals sqrt(a^2 + b^2) times the circumference 4 E(e^2)
/// of this ellipse.
SectionEllipse cyl_section_ellipse(const CylinderGeom& g);

BodyMeasures cyl_measures(const CylinderGeom& g);

}  // namespace oblique
