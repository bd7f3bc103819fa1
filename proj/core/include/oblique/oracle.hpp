#pragma once

#include <cstddef>
#include <cstdint>

#include "oblique/geometry.hpp"
#include "oblique/halfcone.hpp"
#include "oblique/quadrature.hpp"
#include "oblique/tolerance.hpp"

// Verification scaffolding that does not go through the closed forms:
// fundamental forms of the lateral parametrizations, literal quadrature of the
// reduced v-integrands, support-function mean width and Monte Carlo volume.

namespace oblique {

/// First (E, F, G) and second (L, M, N) fundamental forms of a lateral
/// surface patch. The second form is taken against the outward unit normal as
/// L = r_u . N_u, M = (r_u . N_v + r_v . N_u)/2, N = r_v . N_v.
struct FundamentalForms {
  double E = 0.0, F = 0.0, G = 0.0;
  double L = 0.0, M = 0.0, N = 0.0;
  Vec3 normal{};

  double area_element() const;    // sqrt(EG - F^2)
  double mean_curvature() const;  // (EN - 2FM + GL) / (2 (EG - F^2))
};

/// Lateral patch x >= 0 of the cylinder: (sqrt(1 - v^2), a u + v, b u),
/// 0 <= u <= 1, -1 < v < 1.
FundamentalForms forms_at(const CylinderGeom& g, double u, double v);

/// Lateral patch x >= 0 of the cone: ((1 - u) sqrt(1 - v^2), a u + (1 - u) v, b u),
/// 0 <= u < 1, -1 < v < 1.
FundamentalForms forms_at(const ConeGeom& g, double u, double v);

// Literal quadrature of the curved-surface integrals (both halves x >= 0 and
// x <= 0 of the lateral surface, or the full rim).
double quadrature_cyl_lateral(const CylinderGeom& g, const ToleranceConfig& tol = {});
double quadrature_cyl_imc(const CylinderGeom& g, const ToleranceConfig& tol = {});
double quadrature_cyl_edge_term(const CylinderGeom& g, const ToleranceConfig& tol = {});
double quadrature_cone_lateral(const ConeGeom& g, const ToleranceConfig& tol = {});
double quadrature_cone_imc(const ConeGeom& g, const ToleranceConfig& tol = {});
double quadrature_cone_edge_term(const ConeGeom& g, const ToleranceConfig& tol = {});

enum class HullKind { cylinder, cone, halfcone, halfcylinder };

/// Convex body described by its support function h(u) = max over the body of u . p.
/// Half bodies use `side`: smaller keeps y >= 0 on the base disk, larger y <= 0.
/// The half-cylinder is cut by the plane through the axis and the x direction.
struct SupportBody {
  HullKind kind = HullKind::cone;
  double a = 0.0;
  double b = 1.0;
  HalfSide side = HalfSide::smaller;
};

double support(const SupportBody& body, const Vec3& u);

/// Whether p lies in the body (closed set).
bool contains(const SupportBody& body, const Vec3& p);

/// Mean width as twice the spherical average of the support function.
SphereEstimate mw_oracle(const SupportBody& body, const SphereMethod& method);

/// Hit-or-miss Monte Carlo volume inside the bounding box. Deterministic in
/// (n, seed).
SphereEstimate volume_mc(const SupportBody& body, std::size_t n, std::uint64_t seed);

struct SymmetryReport {
  SphereEstimate volume[2];
  SphereEstimate mean_width[2];
  bool volumes_agree = false;  // within 3 combined standard errors
  bool widths_agree = false;
};

/// Volumes and mean widths of the two half-cylinders (Monte Carlo).
SymmetryReport halfcylinder_symmetry_check(const CylinderGeom& g, std::size_t n,
                                           std::uint64_t seed);

}  // namespace oblique
