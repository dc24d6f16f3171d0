#pragma once

#include "flap/weights.hpp"

// Semi-discrete Fourier analysis of a weight set: the rescaled symbol
//   M(xi) = -h^alpha sum_k w_k e^{-ik xi}   on [-pi, pi],
// closed-form symbols where they exist, and a numerical probe of the
// near-origin expansion M(xi) = |xi|^alpha (1 + a |xi|^p + ...) that
// determines the order of accuracy.

namespace flap {

/// Result of the near-origin order probe. For SP the residual
/// |M(xi) - |xi|^alpha| sits at rounding level and no finite order exists;
/// fitted_order is +infinity and max_residual reports the sampled residual.
struct SymbolProbe {
  WeightFamily family;
  double alpha;
  double fitted_order;   // p in the leading correction a |xi|^{alpha+p}
  double leading_coeff;  // a, signed
  double max_residual;   // only meaningful for the SP sentinel
};

/// Evaluate M(xi) from a stored weight set,
///   M(xi) = -h^alpha (w_0 + 2 sum_{k=1..m} w_k cos(k xi)),
/// plus the analytic closure of the k > m tail (algebraic-decay model
/// scaled to the exact tail mass), so M(0) = 0 holds to rounding.
double symbol_from_weights(const WeightSet& ws, double xi);

/// Closed-form symbols: SP -> |xi|^alpha, PER -> (2 - 2 cos xi)^{alpha/2},
/// GL -> the two-branch product form. T and Q have none (domain error).
double closed_symbol(WeightFamily family, double alpha, double xi);

/// Fit p and a in M(xi) - |xi|^alpha ~ a |xi|^{alpha+p} by log-log least
/// squares over a dyadic xi window (closed symbols for PER/GL; weight sums
/// with m = 2^16 for T/Q over a shorter window clear of truncation noise).
/// SP returns the spectral sentinel.
SymbolProbe accuracy_order_probe(WeightFamily family, double alpha);

}  // namespace flap
