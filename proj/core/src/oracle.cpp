#include "oblique/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oblique/errors.hpp"
#include "sampling.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 add(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

Vec3 scale(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }

// Partial derivatives of a parametrized patch r(u, v).
struct Jet {
  Vec3 ru, rv, ruu, ruv, rvv;
};

// Forms from the jet; the normal is -(r_u x r_v)/|r_u x r_v| and its partials
// are N_w = -(n_w - N'(N' . n_w)) / |n| with n = r_u x r_v, N' = n/|n|.
FundamentalForms forms_from_jet(const Jet& j) {
  FundamentalForms f;
  f.E = dot(j.ru, j.ru);
  f.F = dot(j.ru, j.rv);
  f.G = dot(j.rv, j.rv);
  const Vec3 n = cross(j.ru, j.rv);
  const double len = std::sqrt(dot(n, n));
  const Vec3 unit = scale(1.0 / len, n);
  const Vec3 n_u = add(cross(j.ruu, j.rv), cross(j.ru, j.ruv));
  const Vec3 n_v = add(cross(j.ruv, j.rv), cross(j.ru, j.rvv));
  auto normal_partial = [&](const Vec3& nw) {
    return scale(-1.0 / len, add(nw, scale(-dot(unit, nw), unit)));
  };
  const Vec3 normal_u = normal_partial(n_u);
  const Vec3 normal_v = normal_partial(n_v);
  f.normal = scale(-1.0, unit);
  f.L = dot(j.ru, normal_u);
  f.N = dot(j.rv, normal_v);
  f.M = 0.5 * (dot(j.ru, normal_v) + dot(j.rv, normal_u));
  return f;
}

void require_patch(double u, double v, bool cone) {
  if (!(u >= 0.0 && u <= 1.0) || (cone && u == 1.0)) {
    throw DomainError("forms_at: u outside the patch");
  }
  if (!(v > -1.0 && v < 1.0)) throw DomainError("forms_at: v must lie in (-1, 1)");
}

}  // namespace

double FundamentalForms::area_element() const { return std::sqrt(std::max(0.0, E * G - F * F)); }

double FundamentalForms::mean_curvature() const {
  return (E * N - 2.0 * F * M + G * L) / (2.0 * (E * G - F * F));
}

FundamentalForms forms_at(const CylinderGeom& g, double u, double v) {
  require_patch(u, v, false);
  const double s = std::sqrt((1.0 - v) * (1.0 + v));
  Jet j;
  j.ru = {0.0, g.a(), g.b()};
  j.rv = {-v / s, 1.0, 0.0};
  j.ruu = {0.0, 0.0, 0.0};
  j.ruv = {0.0, 0.0, 0.0};
  j.rvv = {-1.0 / (s * s * s), 0.0, 0.0};
  return forms_from_jet(j);
}

FundamentalForms forms_at(const ConeGeom& g, double u, double v) {
  require_patch(u, v, true);
  const double s = std::sqrt((1.0 - v) * (1.0 + v));
  const double w = 1.0 - u;
  Jet j;
  j.ru = {-s, g.a() - v, g.b()};
  j.rv = {-w * v / s, w, 0.0};
  j.ruu = {0.0, 0.0, 0.0};
  j.ruv = {v / s, -1.0, 0.0};
  j.rvv = {-w / (s * s * s), 0.0, 0.0};
  return forms_from_jet(j);
}

double quadrature_cyl_lateral(const CylinderGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  return 2.0 * integrate_chebyshev([a, b](double v) { return std::sqrt(a * a * v * v + b * b); },
                                   -1.0, 1.0, {}, tol);
}

double quadrature_cyl_imc(const CylinderGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  return integrate_chebyshev(
      [a, b](double v) { return (a * a + b * b) * b / (a * a * v * v + b * b); }, -1.0, 1.0,
      {0.0}, tol);
}

double quadrature_cyl_edge_term(const CylinderGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  const double one_edge = integrate_chebyshev(
      [a, b](double v) { return std::acos(a * v / std::sqrt(a * a * v * v + b * b)); }, -1.0,
      1.0, {0.0}, tol);
  return 4.0 * one_edge;
}

double quadrature_cone_lateral(const ConeGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  std::vector<double> cuts{0.0};
  if (a > 1.0) cuts.push_back(1.0 / a);
  return integrate_chebyshev(
      [a, b](double v) { return std::sqrt((1.0 - a * v) * (1.0 - a * v) + b * b); }, -1.0, 1.0,
      cuts, tol);
}

double quadrature_cone_imc(const ConeGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  std::vector<double> cuts{0.0};
  if (a > 1.0) cuts.push_back(1.0 / a);
  return integrate_chebyshev(
      [a, b](double v) {
        return (1.0 + a * a + b * b - 2.0 * a * v) * b / ((1.0 - a * v) * (1.0 - a * v) + b * b);
      },
      -1.0, 1.0, cuts, tol);
}

double quadrature_cone_edge_term(const ConeGeom& g, const ToleranceConfig& tol) {
  const double a = g.a(), b = g.b();
  std::vector<double> cuts{0.0};
  if (a > 1.0) cuts.push_back(1.0 / a);
  const double semicircle = integrate_chebyshev(
      [a, b](double v) {
        return std::acos((-1.0 + a * v) / std::sqrt((1.0 - a * v) * (1.0 - a * v) + b * b));
      },
      -1.0, 1.0, cuts, tol);
  return 2.0 * semicircle;
}

namespace {

// Support of the unit half-disk {y >= 0} (upper) or {y <= 0} (lower) in the
// plane z = 0.
double half_disk_support(const Vec3& u, bool upper) {
  const bool full = upper ? u[1] >= 0.0 : u[1] <= 0.0;
  return full ? std::hypot(u[0], u[1]) : std::abs(u[0]);
}

}  // namespace

double support(const SupportBody& body, const Vec3& u) {
  const double top = body.a * u[1] + body.b * u[2];  // u . (0, a, b)
  const bool upper = body.side == HalfSide::smaller;
  switch (body.kind) {
    case HullKind::cylinder:
      return std::hypot(u[0], u[1]) + std::max(0.0, top);
    case HullKind::cone:
      return std::max(std::hypot(u[0], u[1]), top);
    case HullKind::halfcone:
      return std::max(half_disk_support(u, upper), top);
    case HullKind::halfcylinder:
      return half_disk_support(u, upper) + std::max(0.0, top);
  }
  return 0.0;
}

bool contains(const SupportBody& body, const Vec3& p) {
  const double a = body.a, b = body.b;
  const double x = p[0], y = p[1], z = p[2];
  if (z < 0.0 || z > b) return false;
  const double t = z / b;
  // Half bodies are cut by the plane b y - a z = 0.
  const double cut = b * y - a * z;
  const bool on_side = body.side == HalfSide::smaller ? cut >= 0.0 : cut <= 0.0;
  switch (body.kind) {
    case HullKind::cylinder:
      return x * x + (y - a * t) * (y - a * t) <= 1.0;
    case HullKind::cone:
      return x * x + (y - a * t) * (y - a * t) <= (1.0 - t) * (1.0 - t);
    case HullKind::halfcone:
      return on_side && x * x + (y - a * t) * (y - a * t) <= (1.0 - t) * (1.0 - t);
    case HullKind::halfcylinder:
      return on_side && x * x + (y - a * t) * (y - a * t) <= 1.0;
  }
  return false;
}

SphereEstimate mw_oracle(const SupportBody& body, const SphereMethod& method) {
  if (!(body.a >= 0.0) || !(body.b > 0.0)) throw DomainError("mw_oracle: invalid body");
  const auto avg = integrate_sphere([&body](const Vec3& u) { return support(body, u); }, method);
  return {2.0 * avg.value, 2.0 * avg.error};
}

SphereEstimate volume_mc(const SupportBody& body, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("volume_mc: n must be >= 2");
  if (!(body.a >= 0.0) || !(body.b > 0.0)) throw DomainError("volume_mc: invalid body");
  const bool cylinderish = body.kind == HullKind::cylinder || body.kind == HullKind::halfcylinder;
  const double y_lo = -1.0;
  const double y_hi = cylinderish ? body.a + 1.0 : std::max(1.0, body.a);
  const double box = 2.0 * (y_hi - y_lo) * body.b;

  const std::size_t blocks = (n + detail::kSampleBlock - 1) / detail::kSampleBlock;
  std::vector<std::size_t> hits(blocks, 0);
  detail::parallel_for(blocks, [&](std::size_t block) {
    auto rng = detail::block_rng(seed, block);
    const std::size_t begin = block * detail::kSampleBlock;
    const std::size_t end = std::min(n, begin + detail::kSampleBlock);
    std::size_t h = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Vec3 p{-1.0 + 2.0 * detail::unit_double(rng()),
                   y_lo + (y_hi - y_lo) * detail::unit_double(rng()),
                   body.b * detail::unit_double(rng())};
      if (contains(body, p)) ++h;
    }
    hits[block] = h;
  });
  std::size_t total = 0;
  for (auto h : hits) total += h;
  const double frac = static_cast<double>(total) / static_cast<double>(n);
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(n))};
}

SymmetryReport halfcylinder_symmetry_check(const CylinderGeom& g, std::size_t n,
                                           std::uint64_t seed) {
  SymmetryReport r;
  const HalfSide sides[2] = {HalfSide::smaller, HalfSide::larger};
  for (int i = 0; i < 2; ++i) {
    const SupportBody body{HullKind::halfcylinder, g.a(), g.b(), sides[i]};
    r.volume[i] = volume_mc(body, n, seed + 2 * i);
    r.mean_width[i] = mw_oracle(body, MonteCarlo{n, seed + 2 * i + 1});
  }
  auto agree = [](const SphereEstimate& x, const SphereEstimate& y) {
    return std::abs(x.value - y.value) <= 3.0 * std::hypot(x.error, y.error);
  };
  r.volumes_agree = agree(r.volume[0], r.volume[1]);
  r.widths_agree = agree(r.mean_width[0], r.mean_width[1]);
  return r;
}

}  // namespace oblique
