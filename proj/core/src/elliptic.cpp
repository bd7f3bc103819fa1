#include "oblique/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "oblique/errors.hpp"

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAgmSteps = 64;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

// AGM of (1, sqrt(mc)). Returns K and, via the Gauss-Legendre relation
// E = K (1 - sum_n 2^{n-1} c_n^2) with c_0^2 = mu, the value of E.
struct AgmResult {
  double k;
  double e;
};

AgmResult agm(double mu, double mc) {
  double a = 1.0;
  double g = std::sqrt(mc);
  double sum = 0.5 * mu;
  double pow2 = 0.5;
  for (int i = 0; i < kMaxAgmSteps; ++i) {
    const double c = 0.5 * (a - g);
    const double a_next = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = a_next;
    pow2 *= 2.0;
    sum += pow2 * c * c;
    // c converges quadratically; the next term 2^n c^2 is below rounding.
    if (std::abs(c) <= 1e-10 * a) break;
  }
  const double k = kPi / (2.0 * a);
  return {k, k * (1.0 - sum)};
}

}  // namespace

double carlson_rc(double x, double y) {
  if (!(y > 0.0) || x < 0.0) throw DomainError("carlson_rc: need x >= 0, y > 0");
  if (x == y) return 1.0 / std::sqrt(x);
  // R_C(x, y) = R_C(1, y/x) / sqrt(x) for x > 0; write y/x = 1 + e.
  if (x == 0.0) return kPi / (2.0 * std::sqrt(y));
  const double e = (y - x) / x;
  double r;
  if (std::abs(e) < 1e-4) {
    r = 1.0 + e * (-1.0 / 3.0 + e * (1.0 / 5.0 + e * (-1.0 / 7.0 + e / 9.0)));
  } else if (e > 0.0) {
    const double s = std::sqrt(e);
    r = std::atan(s) / s;
  } else {
    const double s = std::sqrt(-e);
    r = std::atanh(s) / s;
  }
  return r / std::sqrt(x);
}

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0) throw DomainError("carlson_rf: negative argument");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("carlson_rf: more than one zero argument");
  }
  const double x0 = x, y0 = y;
  const double a0 = (x + y + z) / 3.0;
  double q = std::pow(3.0 * 1e-17, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double a = a0;
  double scale = 1.0;  // 4^{-m}
  while (q * scale >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a0 - x0) * scale / a;  // (A0 - x0) / (4^m A_m)
  const double yy = (a0 - y0) * scale / a;
  const double zz = -xx - yy;
  const double e2 = xx * yy - zz * zz;
  const double e3 = xx * yy * zz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
         std::sqrt(a);
}

double carlson_rj(double x, double y, double z, double p) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || !(p > 0.0)) {
    throw DomainError("carlson_rj: need x, y, z >= 0 and p > 0");
  }
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) {
    throw DomainError("carlson_rj: more than one zero argument");
  }
  const double x0 = x, y0 = y, z0 = z;
  const double a0 = (x + y + z + 2.0 * p) / 5.0;
  const double delta = (p - x) * (p - y) * (p - z);
  double q = std::pow(0.25 * 1e-17, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z),
                       std::abs(a0 - p)});
  double a = a0;
  double scale = 1.0;  // 4^{-m}
  double sum = 0.0;
  while (q * scale >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z),
                 sp = std::sqrt(p);
    const double lambda = sx * sy + sx * sz + sy * sz;
    const double d = (sp + sx) * (sp + sy) * (sp + sz);
    const double e = delta * scale * scale * scale / (d * d);
    sum += scale / d * carlson_rc(1.0, 1.0 + e);
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    p = 0.25 * (p + lambda);
    a = 0.25 * (a + lambda);
    scale *= 0.25;
  }
  const double xx = (a0 - x0) * scale / a;
  const double yy = (a0 - y0) * scale / a;
  const double zz = (a0 - z0) * scale / a;
  const double pp = -0.5 * (xx + yy + zz);
  const double e2 = xx * yy + xx * zz + yy * zz - 3.0 * pp * pp;
  const double e3 = xx * yy * zz + 2.0 * e2 * pp + 4.0 * pp * pp * pp;
  const double e4 = (2.0 * xx * yy * zz + e2 * pp + 3.0 * pp * pp * pp) * pp;
  const double e5 = xx * yy * zz * pp * pp;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                        3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return scale * series / (a * std::sqrt(a)) + 6.0 * sum;
}

double ellip_k_mc(double mu, double mc) {
  require_finite(mu, "ellip_k");
  if (!(mc > 0.0)) throw DomainError("ellip_k: requires mu < 1");
  return agm(mu, mc).k;
}

double ellip_e_mc(double mu, double mc) {
  require_finite(mu, "ellip_e");
  if (mc < 0.0) throw DomainError("ellip_e: requires mu <= 1");
  if (mc == 0.0) return 1.0;
  return agm(mu, mc).e;
}

double ellip_pi_mc(double nu, double mu, double mc) {
  require_finite(mu, "ellip_pi");
  require_finite(nu, "ellip_pi");
  if (!(mc > 0.0)) throw DomainError("ellip_pi: requires mu < 1");
  if (!(nu < 1.0)) throw DomainError("ellip_pi: requires nu < 1");
  const double k = agm(mu, mc).k;
  if (nu == 0.0) return k;
  return k + nu / 3.0 * carlson_rj(0.0, mc, 1.0, 1.0 - nu);
}

double ellip_k(double mu) { return ellip_k_mc(mu, 1.0 - mu); }
double ellip_e(double mu) { return ellip_e_mc(mu, 1.0 - mu); }
double ellip_pi(double nu, double mu) { return ellip_pi_mc(nu, mu, 1.0 - mu); }

namespace {

// Scan downward from the analytic upper bound 1/x until f changes sign, then
// polish with TOMS 748. f(upper) >= 0 for both xi and eta.
template <typename F>
double largest_root_below(F f, double upper, double step, const char* fn) {
  double hi = upper;
  double f_hi = f(hi);
  if (f_hi == 0.0) return hi;
  for (;;) {
    const double lo = hi - step;
    const double f_lo = f(lo);
    if (f_lo == 0.0) return lo;
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      boost::uintmax_t iters = 200;
      const auto [l, h] = boost::math::tools::toms748_solve(
          f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(53),
          iters);
      if (iters >= 200) throw SolverError(std::string(fn) + ": polish did not converge");
      return std::abs(f(l)) <= std::abs(f(h)) ? l : h;
    }
    hi = lo;
    f_hi = f_lo;
    if (hi < -upper) throw SolverError(std::string(fn) + ": no sign change found");
  }
}

}  // namespace

double xi(double x) {
  require_finite(x, "xi");
  if (!(x > 0.0)) throw DomainError("xi: requires x > 0");
  const double upper = 1.0 / x;
  const double step = std::min(0.01, 1.0 / (100.0 * x));
  return largest_root_below([x](double y) { return x * y - std::cos(y); }, upper,
                            step, "xi");
}

double eta(double x) {
  require_finite(x, "eta");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("eta: requires 0 < x < 1");
  const double upper = 1.0 / x;
  const double step = std::min(0.01, 1.0 / (100.0 * x));
  return largest_root_below([x](double y) { return x * y - std::sin(y); }, upper,
                            step, "eta");
}

}  // namespace oblique
