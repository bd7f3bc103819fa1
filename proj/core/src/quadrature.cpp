#include "oblique/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <type_traits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oblique/errors.hpp"
#include "sampling.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxPanels = 200'000;

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  int depth;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel evaluate_panel(const F& f, double lo, double hi, int depth) {
  double err = 0.0;
  double l1 = 0.0;
  const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err, &l1);
  // Boost reports the single-panel error in the [-1, 1] coordinate.
  return {lo, hi, v, err * 0.5 * (hi - lo), depth};
}

// Globally adaptive driver over the sorted cut points of a finite interval.
template <typename F>
QuadratureResult adapt(const F& f, const std::vector<double>& cuts,
                       const ToleranceConfig& tol) {
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i] < cuts[i + 1])) continue;
    Panel p = evaluate_panel(f, cuts[i], cuts[i + 1], 0);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  std::size_t evaluations = queue.size() * 31;
  auto target = [&] { return std::max(tol.abs, tol.rel * std::abs(total)); };

  while (!queue.empty() && total_err > target()) {
    Panel worst = queue.top();
    if (worst.depth >= tol.max_depth || queue.size() >= kMaxPanels) {
      throw QuadratureError("integrate: tolerance not reached (depth limit)", total_err);
    }
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = evaluate_panel(f, worst.lo, mid, worst.depth + 1);
    Panel right = evaluate_panel(f, mid, worst.hi, worst.depth + 1);
    evaluations += 62;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  double sum = 0.0;
  double err = 0.0;
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  for (const auto& p : panels) {
    sum += p.value;
    err += p.error;
  }
  if (!std::isfinite(sum)) throw QuadratureError("integrate: non-finite result", err);
  return {sum, err, evaluations};
}

std::vector<double> cut_points(double lo, double hi, const std::vector<double>& interior,
                               const std::function<double(double)>& map) {
  std::vector<double> cuts{map(lo), map(hi)};
  for (double p : interior) {
    if (p > lo && p < hi) cuts.push_back(map(p));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

QuadratureResult integrate_with_error(const Integrand1D& f, const ToleranceConfig& tol) {
  if (!f.eval) throw DomainError("integrate: empty integrand");
  if (!std::isfinite(f.lower) || !std::isfinite(f.upper) || !(f.lower < f.upper)) {
    throw DomainError("integrate: need finite lower < upper");
  }
  if (!(tol.rel >= 1e-14) && !(tol.abs > 0.0)) {
    throw DomainError("integrate: relative tolerance below 1e-14");
  }

  if (f.weight == Weight::inverse_sqrt_1mv2) {
    if (f.lower < -1.0 || f.upper > 1.0) {
      throw DomainError("integrate: weighted interval must lie in [-1, 1]");
    }
    // int g(v)/sqrt(1-v^2) dv = int g(sin t) dt
    auto g = [&f](double t) { return f.eval(std::sin(t)); };
    const auto cuts = cut_points(f.lower, f.upper, f.breakpoints,
                                 [](double v) { return std::asin(v); });
    return adapt(g, cuts, tol);
  }

  if (f.singular_lower || f.singular_upper) {
    // Map [lower, upper] onto [-1, 1], then v = sin t.
    const double mid = 0.5 * (f.lower + f.upper);
    const double half = 0.5 * (f.upper - f.lower);
    const double lo = f.lower;
    const double hi = f.upper;
    // dv/dt = half cos t, taken from the rounded v so that it cancels the
    // endpoint behaviour of eval consistently.
    auto g = [&f, mid, half, lo, hi](double t) {
      const double v = std::clamp(mid + half * std::sin(t), lo, hi);
      return f.eval(v) * std::sqrt((hi - v) * (v - lo));
    };
    const auto cuts = cut_points(f.lower, f.upper, f.breakpoints, [mid, half](double v) {
      return std::asin(std::clamp((v - mid) / half, -1.0, 1.0));
    });
    return adapt(g, cuts, tol);
  }

  const auto cuts = cut_points(f.lower, f.upper, f.breakpoints, [](double v) { return v; });
  return adapt(f.eval, cuts, tol);
}

double integrate(const Integrand1D& f, const ToleranceConfig& tol) {
  return integrate_with_error(f, tol).value;
}

double integrate_chebyshev(std::function<double(double)> g, double lo, double hi,
                           std::vector<double> breakpoints, const ToleranceConfig& tol) {
  Integrand1D f;
  f.eval = std::move(g);
  f.lower = lo;
  f.upper = hi;
  f.breakpoints = std::move(breakpoints);
  f.weight = Weight::inverse_sqrt_1mv2;
  return integrate(f, tol);
}

namespace {

SphereEstimate monte_carlo(const std::function<double(const Vec3&)>& h, const MonteCarlo& mc) {
  if (mc.n < 2) throw DomainError("integrate_sphere: Monte Carlo needs n >= 2");
  const std::size_t blocks = (mc.n + detail::kSampleBlock - 1) / detail::kSampleBlock;
  std::vector<double> sums(blocks, 0.0);
  std::vector<double> sums_sq(blocks, 0.0);
  detail::parallel_for(blocks, [&](std::size_t block) {
    auto rng = detail::block_rng(mc.seed, block);
    const std::size_t begin = block * detail::kSampleBlock;
    const std::size_t end = std::min(mc.n, begin + detail::kSampleBlock);
    double s = 0.0;
    double s2 = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double z = 2.0 * detail::unit_double(rng()) - 1.0;
      const double phi = 2.0 * kPi * detail::unit_double(rng());
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 u{r * std::cos(phi), r * std::sin(phi), z};
      const Vec3 minus_u{-u[0], -u[1], -u[2]};
      const double x = 0.5 * (h(u) + h(minus_u));
      s += x;
      s2 += x * x;
    }
    sums[block] = s;
    sums_sq[block] = s2;
  });
  double s = 0.0;
  double s2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    s += sums[b];
    s2 += sums_sq[b];
  }
  const double n = static_cast<double>(mc.n);
  const double mean = s / n;
  const double var = std::max(0.0, (s2 / n - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

// Orthonormal frame whose third axis is the grid pole. The pole is tilted away
// from the coordinate axes so that kinks of h along circles about those axes
// (right cylinders and cones) cut across the grid lines instead of following
// them.
struct GridFrame {
  Vec3 e1, e2, pole;
};

GridFrame grid_frame() {
  const double c = std::cos(0.7), s = std::sin(0.7);
  const double cz = std::cos(0.4), sz = std::sin(0.4);
  // Rotation about x by 0.7, then about z by 0.4.
  auto rot = [&](const Vec3& v) {
    const Vec3 w{v[0], c * v[1] - s * v[2], s * v[1] + c * v[2]};
    return Vec3{cz * w[0] - sz * w[1], sz * w[0] + cz * w[1], w[2]};
  };
  return {rot({1.0, 0.0, 0.0}), rot({0.0, 1.0, 0.0}), rot({0.0, 0.0, 1.0})};
}

double midpoint_grid(const std::function<double(const Vec3&)>& h, int n_theta, int n_phi) {
  static const GridFrame frame = grid_frame();
  const double dt = kPi / n_theta;
  const double dp = 2.0 * kPi / n_phi;
  std::vector<double> cos_phi(n_phi), sin_phi(n_phi);
  for (int j = 0; j < n_phi; ++j) {
    const double phi = (j + 0.5) * dp;
    cos_phi[j] = std::cos(phi);
    sin_phi[j] = std::sin(phi);
  }
  std::vector<double> rows(static_cast<std::size_t>(n_theta), 0.0);
  detail::parallel_for(rows.size(), [&](std::size_t i) {
    const double theta = (static_cast<double>(i) + 0.5) * dt;
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    double row = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      const double x = st * cos_phi[j];
      const double y = st * sin_phi[j];
      row += h(Vec3{x * frame.e1[0] + y * frame.e2[0] + ct * frame.pole[0],
                    x * frame.e1[1] + y * frame.e2[1] + ct * frame.pole[1],
                    x * frame.e1[2] + y * frame.e2[2] + ct * frame.pole[2]});
    }
    rows[i] = row * st;
  });
  double total = 0.0;
  for (double r : rows) total += r;
  return total * dt * dp / (4.0 * kPi);
}

SphereEstimate lat_long(const std::function<double(const Vec3&)>& h, const LatLongGrid& g) {
  if (g.n_theta < 2 || g.n_phi < 2 || g.n_theta % 2 != 0 || g.n_phi % 2 != 0) {
    throw DomainError("integrate_sphere: grid sizes must be even and >= 2");
  }
  const double fine = midpoint_grid(h, g.n_theta, g.n_phi);
  const double coarse = midpoint_grid(h, g.n_theta / 2, g.n_phi / 2);
  return {(4.0 * fine - coarse) / 3.0, std::abs(fine - coarse) / 3.0};
}

}  // namespace

SphereEstimate integrate_sphere(const std::function<double(const Vec3&)>& h,
                                const SphereMethod& method) {
  if (!h) throw DomainError("integrate_sphere: empty function");
  return std::visit(
      [&h](const auto& m) -> SphereEstimate {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MonteCarlo>) {
          return monte_carlo(h, m);
        } else {
          return lat_long(h, m);
        }
      },
      method);
}

}  // namespace oblique
