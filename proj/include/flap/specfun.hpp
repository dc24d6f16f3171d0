#pragma once

#include <complex>

// Real and complex special functions used by the closed-form weights and
// reference solutions: Gamma, upper incomplete Gamma with complex argument,
// the Gauss hypergeometric series, and trig helpers that stay exact at
// half-integer multiples of pi.

namespace flap {

using Complex = std::complex<double>;

/// sin(pi*x) and cos(pi*x) with argument reduction done on x itself,
/// so e.g. cos_pi(0.5) == 0 exactly and sin_pi(1) == 0 exactly.
double sin_pi(double x);
double cos_pi(double x);

/// Gamma(x), Lanczos approximation (g = 7, 9 coefficients), reflection for
/// x < 0.5. Valid for any real x that is not a non-positive integer.
/// Throws std::domain_error at the poles.
double gamma(double x);

/// log|Gamma(x)| for x > 0. Thin wrapper so all call sites go through one
/// place; large Gamma ratios are evaluated as exp of log-differences.
double log_gamma(double x);

/// Upper incomplete Gamma function Gamma(a, z) for complex z.
/// Series branch for |z| < a + 1, modified Lentz continued fraction
/// otherwise. a must lie in (0, 4). Throws std::runtime_error if the
/// iteration cap is reached or the result is not finite.
Complex upper_incomplete_gamma(double a, Complex z);

/// Gauss hypergeometric 2F1(a, b; c; z) by direct series summation with
/// term-ratio stopping at relative 1e-14. When a or b is a non-positive
/// integer the series terminates and any real z is accepted; otherwise
/// |z| <= 0.9 is enforced (domain error beyond).
double gauss_2f1(double a, double b, double c, double z);

/// Riesz constant C_{1,alpha} = alpha 2^(alpha-1) Gamma((alpha+1)/2) /
/// (sqrt(pi) Gamma((2-alpha)/2)) for alpha in (0, 2).
double riesz_constant(double alpha);

}  // namespace flap
