#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

// Fixed-order Gauss-Legendre panels plus the panel layouts used throughout:
// dyadic grading toward an endpoint singularity and half-period splitting
// for oscillatory integrands.

namespace flap {

namespace gl16 {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr int kN = 8;
constexpr double kNode[kN] = {
    0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
    0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
    0.9445750230732325761, 0.9894009349916499326};
constexpr double kWeight[kN] = {
    0.1894506104550684963, 0.1826034150449235889, 0.1691565193950025382,
    0.1495959888165767320, 0.1246289712555338720, 0.0951585116824927848,
    0.0622535239386478929, 0.0271524594117540949};
}  // namespace gl16

/// 16-point Gauss-Legendre on [a, b].
template <class F>
double integrate_gl16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double rad = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < gl16::kN; ++i) {
    const double d = rad * gl16::kNode[i];
    acc += gl16::kWeight[i] * (f(mid + d) + f(mid - d));
  }
  return acc * rad;
}

/// Integrate over [0, b] with panels graded dyadically toward 0, for
/// integrands with an algebraic endpoint singularity like xi^alpha.
template <class F>
double integrate_graded_origin(F&& f, double b, int levels = 52) {
  double acc = 0.0;
  double hi = b;
  for (int l = 0; l < levels; ++l) {
    const double lo = hi * 0.5;
    acc += integrate_gl16(f, lo, hi);
    hi = lo;
  }
  return acc;
}

/// Integrate f over [0, b] when f oscillates with half-period pi/k
/// (k >= 1): one panel per half-period, the first panel graded toward 0.
template <class F>
double integrate_oscillatory(F&& f, double b, double k) {
  const double half_period = 3.14159265358979323846 / k;
  double acc = integrate_graded_origin(f, std::min(half_period, b));
  double lo = half_period;
  while (lo < b) {
    const double hi = std::min(lo + half_period, b);
    acc += integrate_gl16(f, lo, hi);
    lo = hi;
  }
  return acc;
}

/// Adaptive Simpson on [a, b]; plain recursion with absolute/relative
/// tolerance, for smooth reference integrals in the oracle module.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol);

}  // namespace flap
