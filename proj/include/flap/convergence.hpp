#pragma once

#include <vector>

#include "flap/weights.hpp"

// Grid-refinement sweeps with log-log slope fitting, shared by the CLI and
// the acceptance suite.

namespace flap {

struct ConvergencePoint {
  double h;
  double err;
};

struct ConvergenceReport {
  WeightFamily family;
  double alpha;
  std::vector<ConvergencePoint> points;  // h strictly decreasing
  double fitted_slope;
  long fit_begin = 0;  // [fit_begin, fit_end) entered the fit
  long fit_end = 0;
};

/// Least-squares slope of log err vs log h over the pre-saturation points:
/// when the error sequence is monotone decreasing every point enters,
/// otherwise only points whose error exceeds 3x the smallest-h error.
double fit_slope(const std::vector<ConvergencePoint>& points, long* begin = nullptr,
                 long* end = nullptr);

/// |(-Delta_h)^{alpha/2} e^{-x^2} - exact| at the origin, window [-8, 8].
ConvergenceReport converge_gaussian_origin(WeightFamily family, double alpha,
                                           const std::vector<double>& hs);

/// Same for the compact bump (1 - x^2)_+^{k + alpha/2} at the origin.
ConvergenceReport converge_beta_bump_origin(int k, WeightFamily family,
                                            double alpha,
                                            const std::vector<double>& hs);

/// Sup-error of the Dirichlet solve against (1 - x^2)_+^{k + alpha/2}.
ConvergenceReport converge_dirichlet(int k, WeightFamily family, double alpha,
                                     const std::vector<double>& hs);

struct TailSweepPoint {
  double h;
  double err_corrected;
  double err_zero_extension;
};

/// Far-field study on u = (1 + x^2)^{-(1-alpha)/2}: sup-error over [-L, L]
/// with the algebraic-tail closure (L_M = 3L) vs plain zero extension.
std::vector<TailSweepPoint> lorentzian_tail_sweep(WeightFamily family,
                                                  double alpha, double beta,
                                                  double L,
                                                  const std::vector<double>& hs);

}  // namespace flap
