#include "flap/symbol.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "flap/quadrature.hpp"
#include "flap/specfun.hpp"

namespace flap {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Model for the truncated cosine tail sum_{k>m} k^{-1-alpha} cos(k xi),
// replacing the sum by the integral from m + 1/2 (midpoint Euler-Maclaurin)
// and rotating the contour so the integrand stops oscillating:
//   int_A^inf u^{-1-alpha} e^{iu} du = i e^{iA} int_0^inf (A+it)^{-1-alpha} e^{-t} dt,
// with A = (m + 1/2) xi. S(0) = (m + 1/2)^{-alpha} / alpha.
double tail_cos_model(double alpha, int m, double xi) {
  const double edge = m + 0.5;
  if (xi == 0.0) return std::pow(edge, -alpha) / alpha;
  const double A = edge * xi;
  auto integrand = [&](double t) {
    return std::pow(Complex(A, t), -1.0 - alpha) * std::exp(-t);
  };
  Complex I(0.0, 0.0);
  // graded panels toward t = 0 resolve the A-scale boundary layer
  double hi = 40.0;
  for (int level = 0; level < 64; ++level) {
    const double lo = hi * 0.5;
    const double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
    for (int q = 0; q < gl16::kN; ++q) {
      const double d = rad * gl16::kNode[q];
      I += gl16::kWeight[q] * rad * (integrand(mid + d) + integrand(mid - d));
    }
    hi = lo;
  }
  const Complex val = Complex(0.0, 1.0) * std::exp(Complex(0.0, A)) * I;
  return std::pow(xi, alpha) * val.real();
}

}  // namespace

double symbol_from_weights(const WeightSet& ws, double xi) {
  const double axi = std::abs(xi);
  double s = ws.w[0];
  for (int k = 1; k <= ws.m; ++k)
    s += 2.0 * ws.w[static_cast<size_t>(k)] * std::cos(k * axi);
  // Tail closure: total tail mass is known exactly from the w_0 convention;
  // modulate it with the algebraic-decay model so M(0) vanishes exactly.
  const double t0 = 0.5 * ws.tail_mass();  // sum_{k > m} w_k
  double tail = t0;
  if (axi > 0.0) {
    const double s0 = tail_cos_model(ws.alpha, ws.m, 0.0);
    tail = t0 * tail_cos_model(ws.alpha, ws.m, axi) / s0;
  }
  return -std::pow(ws.h, ws.alpha) * (s + 2.0 * tail);
}

double closed_symbol(WeightFamily family, double alpha, double xi) {
  const double axi = std::abs(xi);
  switch (family) {
    case WeightFamily::SP:
      return std::pow(axi, alpha);
    case WeightFamily::PER:
      return std::pow(2.0 - 2.0 * std::cos(axi), alpha / 2.0);
    case WeightFamily::GL: {
      if (alpha == 1.0)
        throw std::domain_error("closed_symbol: GL at alpha = 1 has no product form");
      const double s = std::pow(2.0 * std::sin(axi / 2.0), alpha);
      if (alpha < 1.0)
        return std::cos((kPi - axi) * alpha / 2.0) / cos_pi(alpha / 2.0) * s;
      return std::cos((kPi - axi) * alpha / 2.0 + axi) / cos_pi(alpha / 2.0) * s;
    }
    case WeightFamily::T:
    case WeightFamily::Q:
      throw std::domain_error("closed_symbol: no closed form for T/Q");
  }
  throw std::domain_error("closed_symbol: unknown family");
}

SymbolProbe accuracy_order_probe(WeightFamily family, double alpha) {
  SymbolProbe probe{family, alpha, 0.0, 0.0, 0.0};

  if (family == WeightFamily::SP) {
    double worst = 0.0;
    for (int e = 4; e <= 12; ++e) {
      const double xi = kPi * std::pow(2.0, -e);
      worst = std::max(worst, std::abs(closed_symbol(family, alpha, xi) -
                                       std::pow(xi, alpha)));
    }
    probe.fitted_order = std::numeric_limits<double>::infinity();
    probe.max_residual = worst;
    return probe;
  }

  const bool from_weights =
      (family == WeightFamily::T || family == WeightFamily::Q);
  // Window choice trades truncation noise (small xi) against higher-order
  // contamination (large xi). T's next term sits only xi^alpha above the
  // leading xi^{2-alpha} one, so its window goes deep; Q's leading residual
  // is already ~xi^4 and would sink below the closure noise there.
  int e_lo = 4, e_hi = 12;
  if (family == WeightFamily::T) e_lo = 9;
  if (family == WeightFamily::Q) { e_lo = 3; e_hi = 7; }

  WeightSet ws;
  if (from_weights) ws = make_weights(family, alpha, 1.0, 1 << 17);

  std::vector<double> lx, ly;
  std::vector<int> sign;
  for (int e = e_lo; e <= e_hi; ++e) {
    const double xi = kPi * std::pow(2.0, -e);
    const double M = from_weights ? symbol_from_weights(ws, xi)
                                  : closed_symbol(family, alpha, xi);
    const double d = M - std::pow(xi, alpha);
    if (d == 0.0) throw std::runtime_error("accuracy_order_probe: zero residual");
    lx.push_back(std::log(xi));
    ly.push_back(std::log(std::abs(d)));
    sign.push_back(d > 0.0 ? 1 : -1);
  }
  for (size_t i = 1; i < sign.size(); ++i)
    if (sign[i] != sign[0])
      throw std::runtime_error("accuracy_order_probe: residual changes sign in window");

  const size_t n = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  probe.fitted_order = slope - alpha;

  // Extract the coefficient from the two smallest-xi points: the local
  // pairwise order is free of the higher-order contamination that biases
  // the full-window slope.
  const double p_local = (ly[n - 2] - ly[n - 1]) / (lx[n - 2] - lx[n - 1]) - alpha;
  const double xi_min = std::exp(lx[n - 1]);
  const double d_min = sign[n - 1] * std::exp(ly[n - 1]);
  probe.leading_coeff = d_min / std::pow(xi_min, alpha + p_local);
  return probe;
}

}  // namespace flap
