#include "flap/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace flap {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

double lanczos_gamma_positive(double x) {
  // Requires x >= 0.5.
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  // r in [-1, 1]; fold to [-0.5, 0.5] where sin(pi r) is well conditioned.
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(0.5 + x); }

double gamma(double x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma: pole at non-positive integer");
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (sin_pi(x) * lanczos_gamma_positive(1.0 - x));
  }
  return lanczos_gamma_positive(x);
}

double log_gamma(double x) {
  if (x <= 0.0) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

namespace {

constexpr int kIterCap = 10000;

// Lower incomplete gamma by power series: gamma(a, z) = z^a e^-z
// sum_{n>=0} z^n / (a (a+1) ... (a+n)).
Complex lower_incomplete_series(double a, Complex z) {
  Complex term = 1.0 / a;
  Complex sum = term;
  for (int n = 1; n <= kIterCap; ++n) {
    term *= z / (a + n);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum))
      return std::pow(z, a) * std::exp(-z) * sum;
  }
  throw std::runtime_error("upper_incomplete_gamma: series did not converge");
}

// Continued fraction for Gamma(a, z), modified Lentz.
Complex upper_incomplete_cf(double a, Complex z) {
  const double tiny = 1e-300;
  Complex b = z + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex f = d;
  for (int i = 1; i <= kIterCap; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      return std::pow(z, a) * std::exp(-z) * f;
  }
  throw std::runtime_error(
      "upper_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

Complex upper_incomplete_gamma(double a, Complex z) {
  if (!(a > 0.0 && a < 4.0))
    throw std::domain_error("upper_incomplete_gamma: a must be in (0, 4)");
  Complex result;
  if (std::abs(z) == 0.0) {
    result = gamma(a);
  } else if (std::abs(z) < a + 1.0) {
    result = gamma(a) - lower_incomplete_series(a, z);
  } else {
    result = upper_incomplete_cf(a, z);
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
    throw std::runtime_error("upper_incomplete_gamma: non-finite result");
  return result;
}

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("gauss_2f1: c is a non-positive integer");
  const bool terminating =
      is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminating && std::abs(z) > 0.9)
    throw std::domain_error("gauss_2f1: |z| > 0.9 outside series range");
  if (z == 0.0) return 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kIterCap; ++n) {
    term *= (a + n) * (b + n) / (c + n) * z / (n + 1);
    if (term == 0.0) break;  // terminating series exhausted
    sum += term;
    if (!terminating && std::abs(term) < 1e-14 * std::abs(sum)) break;
  }
  return sum;
}

double riesz_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::domain_error("riesz_constant: alpha must be in (0, 2)");
  return alpha * std::pow(2.0, alpha - 1.0) * gamma((alpha + 1.0) / 2.0) /
         (std::sqrt(kPi) * gamma((2.0 - alpha) / 2.0));
}

}  // namespace flap
