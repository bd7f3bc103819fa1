#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "oblique/geometry.hpp"
#include "oblique/tolerance.hpp"

namespace oblique {

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  // |f(x)|
  std::pair<double, double> bracket;
  std::size_t iterations = 0;
};

/// Root of f on [lo, hi] by TOMS 748 (bisection-safeguarded inverse cubic
/// interpolation), refined to adjacent doubles. Requires f(lo) f(hi) < 0 (or a
/// zero at an end point). Throws SolverError if there is no sign change or the
/// final residual exceeds tol.
RootResult solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol);

/// The four half-cone ratio objectives.
enum class Problem { ar_lateral, ar_total, ar_addendum, mw };

std::string_view to_string(Problem p);
std::optional<Problem> parse_problem(std::string_view name);

/// Stationarity conditions of the b -> 0+ ratio limits, written as lhs - rhs.
double ar_lateral_equation(double a);  // (pi / 2a) sqrt(a^2 - 1) - arccsc(a)
double ar_total_equation(double a);    // (pi / a)(a - sqrt(a^2 - 1)) - arcsec(a)
double mw_equation(double a);  // sqrt(a^2 - 1)(2 + pi sqrt(a^2 + 1)) / (2 a^2) - 1 - arccsc(a)

struct Optimum {
  Problem problem = Problem::ar_lateral;
  RootResult root;
  double a_star = 0.0;
  double infimum = 0.0;
  /// a_star obtained independently through xi or eta, where such a reduction
  /// exists: 1 / sin(xi(2/pi)) for the lateral and addendum problems,
  /// -1 / cos(eta(1/pi)) for the total one.
  std::optional<double> reduced_a_star;
};

/// Fixed bracket shared by every problem; each equation changes sign on it.
inline constexpr std::pair<double, double> kOptimumBracket{1.0 + 1e-9, 3.0};

Optimum solve_ar_lateral();
Optimum solve_ar_total();
Optimum solve_ar_addendum();
Optimum solve_mw();
Optimum solve(Problem p);

/// Objective value of the b -> 0+ ratio limit for a problem.
double ratio_limit(Problem p, double a);

/// d/da (order 1) or d^2/da^2 (order 2) of the lateral cone area, by quadrature
/// of the differentiated integrand.
double ar_partial_a(const ConeGeom& g, int order, const ToleranceConfig& tol = {});

struct SweepMinimum {
  double ratio = 0.0;
  double a = 0.0;
  double b = 0.0;
};

struct SanitySweep {
  SweepMinimum ar_lateral;
  SweepMinimum ar_total;
  SweepMinimum ar_addendum;
  SweepMinimum mw;
  std::size_t points = 0;
};

/// Smallest instantaneous ratio of each objective over a steps x steps grid,
/// a uniform on (0, 5] and b log-uniform on [1e-3, 5]. Evidence only, not a
/// proof of global minimality.
SanitySweep sanity_sweep(int steps = 50, const ToleranceConfig& tol = {});

}  // namespace oblique
