#include "flap/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "flap/quadrature.hpp"
#include "flap/specfun.hpp"

namespace flap {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;

void check_alpha_open(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::domain_error("oracle: alpha must be in (0, 2)");
}
}  // namespace

double flap_gaussian_origin(double alpha) {
  check_alpha_open(alpha);
  return std::pow(2.0, alpha) * gamma((1.0 + alpha) / 2.0) / kSqrtPi;
}

double flap_lorentzian(double alpha, double x) {
  check_alpha_open(alpha);
  if (alpha == 1.0) return 0.0;
  return std::pow(2.0, alpha) * gamma((1.0 + alpha) / 2.0) /
         gamma((1.0 - alpha) / 2.0) * std::pow(1.0 + x * x, -(1.0 + alpha) / 2.0);
}

double beta_bump_constant(int k, double alpha) {
  check_alpha_open(alpha);
  if (k < 0) throw std::domain_error("beta_bump_constant: k must be >= 0");
  return std::pow(2.0, alpha) * gamma(k + 1.0 + alpha / 2.0) *
         gamma((1.0 + alpha) / 2.0) / (gamma(k + 1.0) * kSqrtPi);
}

double flap_beta_bump(int k, double alpha, double x) {
  check_alpha_open(alpha);
  if (k < 0) throw std::domain_error("flap_beta_bump: k must be >= 0");
  const double ax = std::abs(x);
  if (ax < 1.0) {
    return beta_bump_constant(k, alpha) *
           gauss_2f1((1.0 + alpha) / 2.0, -static_cast<double>(k), 0.5, x * x);
  }
  const double z = 1.0 / (x * x);
  if (z > 0.9)
    throw std::domain_error(
        "flap_beta_bump: |x| in [1, 1.0541) is outside the outer-series range");
  // Gamma(-alpha/2) < 0, so the outer branch is negative, as the operator
  // of a nonnegative bump must be outside its support. The |x|^{-1-alpha}
  // decay factor follows from the even-part expansion of |x-y|^{-1-alpha}
  // against the Beta integral; K_tilde equals -C_{1,alpha} B(k+1+alpha/2, 1/2).
  const double ktilde = std::pow(2.0, alpha) * gamma(k + 1.0 + alpha / 2.0) *
                        gamma((1.0 + alpha) / 2.0) /
                        (gamma(-alpha / 2.0) * gamma((3.0 + alpha) / 2.0 + k));
  return ktilde * std::pow(ax, -1.0 - alpha) *
         gauss_2f1((1.0 + alpha) / 2.0, (2.0 + alpha) / 2.0,
                   (3.0 + alpha) / 2.0 + k, z);
}

double exit_time_constant(double alpha) {
  check_alpha_open(alpha);
  return kSqrtPi /
         (std::pow(2.0, alpha) * gamma(1.0 + alpha / 2.0) * gamma((1.0 + alpha) / 2.0));
}

double heat_green(double alpha, double t, double x,
                  const std::function<std::complex<double>(double)>& u0_spectrum) {
  if (!(t > 0.0)) throw std::domain_error("heat_green: t must be > 0");
  if (!(alpha > 0.0 && alpha <= 2.0))
    throw std::domain_error("heat_green: alpha must be in (0, 2]");
  auto integrand = [&](double xi) {
    const std::complex<double> phase(std::cos(xi * x), std::sin(xi * x));
    return (phase * u0_spectrum(xi)).real() * std::exp(-t * std::pow(xi, alpha));
  };
  // One panel per half-period, marching until either the kernel cutoff is
  // reached or the spectrum has made a run of panels negligible.
  const double xi_max = std::pow(40.0 / t, 1.0 / alpha);
  const double width = kPi / std::max(std::abs(x), 0.5);
  double acc = integrate_graded_origin(integrand, std::min(width, xi_max));
  double lo = width;
  int quiet = 0;
  while (lo < xi_max && quiet < 8) {
    const double hi = std::min(lo + width, xi_max);
    const double part = integrate_gl16(integrand, lo, hi);
    acc += part;
    quiet = (std::abs(part) <= 1e-17 * (std::abs(acc) + 1e-300)) ? quiet + 1 : 0;
    lo = hi;
  }
  if (!std::isfinite(acc)) throw std::runtime_error("heat_green: quadrature failure");
  return acc / kPi;
}

double heat_green_sign(double alpha, double t, double x) {
  return heat_green(alpha, t, x, [](double xi) {
    return std::complex<double>(0.0, -2.0 / xi);  // 2/(i xi)
  });
}

}  // namespace flap
