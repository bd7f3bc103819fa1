#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "oblique/tolerance.hpp"

namespace oblique {

/// Known weight factored out of the integrand.
enum class Weight {
  none,
  /// eval(v) is the regular part g(v); the integral is of g(v) / sqrt(1 - v^2)
  /// and [lower, upper] must lie inside [-1, 1].
  inverse_sqrt_1mv2,
};

struct Integrand1D {
  std::function<double(double)> eval;
  double lower = 0.0;
  double upper = 0.0;
  bool singular_lower = false;
  bool singular_upper = false;
  /// Interior points where eval is not smooth (kinks, near-spikes).
  std::vector<double> breakpoints;
  Weight weight = Weight::none;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (G15/K31) integration. Inverse square-root
/// endpoint singularities, flagged or factored out through Weight, are removed
/// with v = sin t on the interval mapped to [-1, 1].
/// Throws QuadratureError when the tolerance cannot be met within
/// tol.max_depth bisections of a panel.
QuadratureResult integrate_with_error(const Integrand1D& f, const ToleranceConfig& tol = {});

double integrate(const Integrand1D& f, const ToleranceConfig& tol = {});

/// Shorthand for int_lo^hi g(v) / sqrt(1 - v^2) dv with -1 <= lo < hi <= 1.
double integrate_chebyshev(std::function<double(double)> g, double lo, double hi,
                           std::vector<double> breakpoints = {},
                           const ToleranceConfig& tol = {});

using Vec3 = std::array<double, 3>;

struct MonteCarlo {
  std::size_t n = 1'000'000;
  std::uint64_t seed = 0;
};

struct LatLongGrid {
  int n_theta = 2048;
  int n_phi = 4096;
};

using SphereMethod = std::variant<MonteCarlo, LatLongGrid>;

struct SphereEstimate {
  double value = 0.0;
  double error = 0.0;  // one standard error (Monte Carlo) or extrapolation error (grid)
};

/// Normalized spherical average (1/4pi) int_{S^2} h dsigma.
///
/// Monte Carlo draws uniform directions in fixed-size blocks, each block with
/// its own generator seeded from (seed, block index), and pairs every direction
/// with its antipode; results depend only on (seed, n).
///
/// The grid method is the midpoint rule in (theta, phi) with weight sin(theta),
/// Richardson-extrapolated from the n and n/2 grids (n_theta, n_phi even). Its
/// pole is a fixed direction tilted away from the coordinate axes.
SphereEstimate integrate_sphere(const std::function<double(const Vec3&)>& h,
                                const SphereMethod& method);

}  // namespace oblique
