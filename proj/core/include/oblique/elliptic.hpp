#pragma once

// Complete elliptic integrals in the *parameter* convention: mu multiplies
// sin^2(theta) directly,
//
//   K(mu)     = int_0^{pi/2} (1 - mu sin^2 t)^{-1/2} dt
//   E(mu)     = int_0^{pi/2} (1 - mu sin^2 t)^{1/2} dt
//   Pi(nu,mu) = int_0^{pi/2} (1 - nu sin^2 t)^{-1} (1 - mu sin^2 t)^{-1/2} dt
//
// Most libraries (Boost, std::comp_ellint_*) take the modulus k = sqrt(mu)
// instead. Negative mu and nu are legal.

namespace oblique {

/// K(mu), mu < 1. Arithmetic-geometric mean.
double ellip_k(double mu);

/// E(mu), mu <= 1. Arithmetic-geometric mean with the Gauss-Legendre sum.
double ellip_e(double mu);

/// Pi(nu, mu), mu < 1, nu < 1. K plus a Carlson R_J term.
double ellip_pi(double nu, double mu);

// Variants taking the complementary parameter mc = 1 - mu as well, for
// callers that can form it without cancellation (mu close to 1).
double ellip_k_mc(double mu, double mc);
double ellip_e_mc(double mu, double mc);
double ellip_pi_mc(double nu, double mu, double mc);

/// Carlson symmetric integrals. R_F needs at most one zero argument; R_J
/// needs p > 0; R_C needs y > 0.
double carlson_rf(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);
double carlson_rc(double x, double y);

/// Largest real y with x*y = cos(y), x > 0. xi(1) is the Dottie number.
double xi(double x);

/// Largest real y with x*y = sin(y), 0 < x < 1.
double eta(double x);

}  // namespace oblique
