#include "oblique/cylinder.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "oblique/elliptic.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;

// Parameter a^2 / (a^2 + b^2) and its complement, formed without cancellation.
struct Eccentricity {
  double e2;
  double complement;
};

Eccentricity eccentricity(const CylinderGeom& g) {
  const double a2 = g.a() * g.a();
  const double b2 = g.b() * g.b();
  return {a2 / (a2 + b2), b2 / (a2 + b2)};
}

}  // namespace

double assemble_mean_width(double imc, std::span<const double> edge_contributions) {
  if (!(imc >= 0.0)) throw DomainError("assemble_mean_width: imc must be >= 0");
  double edges = 0.0;
  for (double c : edge_contributions) {
    if (!(c >= 0.0)) throw DomainError("assemble_mean_width: edge contribution must be >= 0");
    edges += c;
  }
  return imc / (2.0 * kPi) + edges / (4.0 * kPi);
}

double cyl_volume(const CylinderGeom& g) { return kPi * g.b(); }

CylinderArea cyl_area(const CylinderGeom& g) {
  const auto [e2, mc] = eccentricity(g);
  const double lateral = 4.0 * std::hypot(g.a(), g.b()) * ellip_e_mc(e2, mc);
  return {lateral, lateral + 2.0 * kPi};
}

double cyl_imc(const CylinderGeom& g) { return kPi * std::hypot(g.a(), g.b()); }

double cyl_edge_term(const CylinderGeom&) { return 4.0 * (kPi * kPi / 2.0); }

double cyl_mean_width(const CylinderGeom& g) {
  return 0.5 * (std::hypot(g.a(), g.b()) + kPi);
}

SectionEllipse cyl_section_ellipse(const CylinderGeom& g) {
  const auto [e2, mc] = eccentricity(g);
  return {1.0, g.b() / std::hypot(g.a(), g.b()), e2, 4.0 * ellip_e_mc(e2, mc)};
}

BodyMeasures cyl_measures(const CylinderGeom& g) {
  const auto area = cyl_area(g);
  return {cyl_volume(g), area.lateral, area.total, cyl_imc(g), cyl_edge_term(g),
          cyl_mean_width(g)};
}

}  // namespace oblique
