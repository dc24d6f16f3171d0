#pragma once

#include <complex>
#include <functional>

// Reference solutions used by tests and the convergence harness: closed
// forms for the Gaussian, the Lorentzian-type algebraic-tail function and
// the compactly supported beta bumps, plus Fourier quadrature for the
// fractional heat kernel.

namespace flap {

/// (-Delta)^{alpha/2} e^{-x^2} at x = 0:  2^alpha Gamma((1+alpha)/2)/sqrt(pi).
double flap_gaussian_origin(double alpha);

/// (-Delta)^{alpha/2} (1+x^2)^{-(1-alpha)/2}
///   = 2^alpha Gamma((1+alpha)/2) Gamma((1-alpha)/2)^{-1} (1+x^2)^{-(1+alpha)/2}.
/// Returns 0 at alpha = 1 (the prefactor's Gamma pole kills it).
double flap_lorentzian(double alpha, double x);

/// Inner-branch constant K_{k,alpha} of the beta-bump formula.
double beta_bump_constant(int k, double alpha);

/// (-Delta)^{alpha/2} (1-x^2)_+^{k+alpha/2}: terminating 2F1 polynomial for
/// |x| < 1, hypergeometric outer branch for |x| >= 1/sqrt(0.9); the narrow
/// annulus between is rejected (series guard).
double flap_beta_bump(int k, double alpha, double x);

/// Mean exit time constant: u = K_alpha (1-x^2)_+^{alpha/2} solves
/// (-Delta)^{alpha/2} u = 1 on (-1,1) with u = 0 outside,
///   K_alpha = sqrt(pi) / (2^alpha Gamma(1+alpha/2) Gamma((1+alpha)/2)).
double exit_time_constant(double alpha);

/// Heat-kernel quadrature: u(x, t) = (1/pi) int_0^inf
/// Re[e^{i xi x} u0_hat(xi)] e^{-t xi^alpha} d xi for real initial data,
/// truncated where the kernel drops below 1e-17, panels per half-period.
double heat_green(double alpha, double t, double x,
                  const std::function<std::complex<double>(double)>& u0_spectrum);

/// heat_green specialised to u0 = sign(x) (spectrum 2/(i xi), principal
/// value): u(x, t) = (2/pi) int_0^inf sin(xi x) e^{-t xi^alpha} / xi d xi.
double heat_green_sign(double alpha, double t, double x);

}  // namespace flap
