#include "oblique/optimize.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "oblique/elliptic.hpp"
#include "oblique/errors.hpp"
#include "oblique/halfcone.hpp"
#include "oblique/quadrature.hpp"
#include "oblique/trig.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResidualTol = 1e-13;

}  // namespace

RootResult solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (!(lo < hi)) throw SolverError("solve_bracketed: need lo < hi");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw SolverError("solve_bracketed: non-finite function value at bracket end");
  }
  if (f_lo == 0.0) return {lo, 0.0, {lo, lo}, 0};
  if (f_hi == 0.0) return {hi, 0.0, {hi, hi}, 0};
  if ((f_lo < 0.0) == (f_hi < 0.0)) throw SolverError("solve_bracketed: no sign change");

  constexpr boost::uintmax_t kMaxIter = 200;
  boost::uintmax_t iters = kMaxIter;
  const auto [l, h] = boost::math::tools::toms748_solve(
      f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(53), iters);
  if (iters >= kMaxIter) throw SolverError("solve_bracketed: iteration limit reached");
  const double r_l = std::abs(f(l));
  const double r_h = std::abs(f(h));
  RootResult out{r_l <= r_h ? l : h, std::min(r_l, r_h), {l, h}, static_cast<std::size_t>(iters)};
  if (!(out.residual <= tol)) {
    throw SolverError("solve_bracketed: residual " + std::to_string(out.residual) +
                      " above tolerance");
  }
  return out;
}

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::ar_lateral: return "ar-lateral";
    case Problem::ar_total: return "ar-total";
    case Problem::ar_addendum: return "ar-addendum";
    case Problem::mw: return "mw";
  }
  return "unknown";
}

std::optional<Problem> parse_problem(std::string_view name) {
  for (auto p : {Problem::ar_lateral, Problem::ar_total, Problem::ar_addendum, Problem::mw}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

double ar_lateral_equation(double a) {
  return kPi / (2.0 * a) * std::sqrt(a * a - 1.0) - arccsc(a);
}

double ar_total_equation(double a) {
  return kPi / a * (a - std::sqrt(a * a - 1.0)) - arcsec(a);
}

double mw_equation(double a) {
  return std::sqrt(a * a - 1.0) * (2.0 + kPi * std::sqrt(a * a + 1.0)) / (2.0 * a * a) - 1.0 -
         arccsc(a);
}

double ratio_limit(Problem p, double a) {
  switch (p) {
    case Problem::ar_lateral: return ratio_ar_lateral_limit(a);
    case Problem::ar_total: return ratio_ar_total_limit(a);
    case Problem::ar_addendum: return ratio_ar_addendum_limit(a);
    case Problem::mw: return ratio_mw_limit(a);
  }
  throw DomainError("ratio_limit: unknown problem");
}

namespace {

Optimum solve_with(Problem p, double (*equation)(double)) {
  Optimum o;
  o.problem = p;
  o.root = solve_bracketed(equation, kOptimumBracket.first, kOptimumBracket.second, kResidualTol);
  o.a_star = o.root.x;
  o.infimum = ratio_limit(p, o.a_star);
  return o;
}

}  // namespace

Optimum solve_ar_lateral() {
  auto o = solve_with(Problem::ar_lateral, ar_lateral_equation);
  // sin(x) = 1/a with x = xi(2/pi)
  o.reduced_a_star = 1.0 / std::sin(xi(2.0 / kPi));
  return o;
}

Optimum solve_ar_total() {
  auto o = solve_with(Problem::ar_total, ar_total_equation);
  // cos(pi - w) = 1/a with w = eta(1/pi)
  o.reduced_a_star = -1.0 / std::cos(eta(1.0 / kPi));
  return o;
}

Optimum solve_ar_addendum() {
  // Same stationarity condition as the lateral problem, different objective.
  auto o = solve_with(Problem::ar_addendum, ar_lateral_equation);
  o.reduced_a_star = 1.0 / std::sin(xi(2.0 / kPi));
  return o;
}

Optimum solve_mw() { return solve_with(Problem::mw, mw_equation); }

Optimum solve(Problem p) {
  switch (p) {
    case Problem::ar_lateral: return solve_ar_lateral();
    case Problem::ar_total: return solve_ar_total();
    case Problem::ar_addendum: return solve_ar_addendum();
    case Problem::mw: return solve_mw();
  }
  throw DomainError("solve: unknown problem");
}

double ar_partial_a(const ConeGeom& g, int order, const ToleranceConfig& tol) {
  const double a = g.a();
  const double b = g.b();
  std::vector<double> cuts;
  if (a > 1.0) cuts.push_back(1.0 / a);
  if (order == 1) {
    return integrate_chebyshev(
        [a, b](double v) {
          const double w = 1.0 - a * v;
          return -v * w / std::hypot(w, b);
        },
        -1.0, 1.0, cuts, tol);
  }
  if (order == 2) {
    return integrate_chebyshev(
        [a, b](double v) {
          const double r = std::hypot(1.0 - a * v, b);
          return b * b * v * v / (r * r * r);
        },
        -1.0, 1.0, cuts, tol);
  }
  throw DomainError("ar_partial_a: order must be 1 or 2");
}

SanitySweep sanity_sweep(int steps, const ToleranceConfig& tol) {
  if (steps < 2) throw DomainError("sanity_sweep: steps must be >= 2");
  SanitySweep out;
  out.ar_lateral.ratio = out.ar_total.ratio = out.ar_addendum.ratio = out.mw.ratio =
      std::numeric_limits<double>::infinity();
  const double log_lo = std::log(1e-3);
  const double log_hi = std::log(5.0);
  auto keep = [](SweepMinimum& m, double r, double a, double b) {
    if (r < m.ratio) m = {r, a, b};
  };
  for (int i = 1; i <= steps; ++i) {
    const double a = 5.0 * i / steps;
    for (int j = 0; j < steps; ++j) {
      const double b = std::exp(log_lo + (log_hi - log_lo) * j / (steps - 1));
      const auto r = half_ratios(ConeGeom(a, b), tol);
      keep(out.ar_lateral, r.ar_lateral, a, b);
      keep(out.ar_total, r.ar_total, a, b);
      keep(out.ar_addendum, r.ar_addendum, a, b);
      keep(out.mw, r.mean_width, a, b);
      ++out.points;
    }
  }
  return out;
}

}  // namespace oblique
