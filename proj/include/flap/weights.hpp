#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// The five weight families of the scheme
//   (-Delta_h)^{alpha/2} u_j = sum_k (u_j - u_{j-k}) w_k,
// generated from their closed forms, together with CFL constants,
// positivity, and the k -> infinity decay prefactors.

namespace flap {

enum class WeightFamily { SP, PER, GL, T, Q };

const char* family_name(WeightFamily f);
WeightFamily family_from_name(const std::string& name);

/// Parity selector for decay prefactors (the quadratic family alternates).
enum class Parity { Even, Odd, Any };

/// Symmetric half-sequence of convolution weights: w[k] holds w_k = w_{-k}
/// for k = 0..m. w[0] carries the full convention w_0 = -sum_{k != 0} w_k
/// over all of Z, evaluated in closed form per family.
struct WeightSet {
  WeightFamily family = WeightFamily::PER;
  double alpha = 1.0;
  double h = 1.0;
  int m = 0;
  std::vector<double> w;  // size m + 1

  /// Weight mass beyond the stored range: sum_{|k| > m} w_k, exact given
  /// the full-convention w[0]. Non-negative for non-negative families.
  double tail_mass() const;
};

/// Generate weights for k = 0..m. alpha ranges: (0, 2] for SP, PER, GL
/// (SP and PER at alpha = 2 and GL at alpha = 1 use their special
/// sequences), (0, 2) for T and Q.
WeightSet make_weights(WeightFamily family, double alpha, double h, int m);

/// CFL constant C_max = (-h^alpha w_0)^{-1} from the closed forms of the
/// summary table (an algebraic route independent of make_weights).
/// SP is restricted to alpha in (0, 1); GL at alpha = 1 uses the special
/// sequence's value pi/2 (the one-sided limits degenerate to 0).
double cfl_cmax(WeightFamily family, double alpha);

/// Leading constant C in w_k ~ C k^{-1-alpha} h^{-alpha}. Equal to
/// C_{1,alpha} for PER, GL, T and for SP with alpha in (0, 1). The
/// quadratic family alternates: (4/3) C_{1,alpha} on even k and
/// (2/3) C_{1,alpha} on odd k (midpoint vs endpoint quadrature nodes).
double decay_prefactor(WeightFamily family, double alpha,
                       Parity parity = Parity::Any);

/// True iff w[k] >= 0 for every k >= 1.
bool is_nonnegative(const WeightSet& ws);

/// Weights from a rescaled symbol M on [0, pi] via
///   w_k = -h^{-alpha}/pi * int_0^pi M(xi) cos(k xi) dxi,
/// one Gauss-Legendre panel per half-period of cos(k xi) with dyadic
/// grading toward the origin cusp. M must be symmetric with M(0) = 0;
/// then w[0] satisfies the convention automatically.
WeightSet weights_from_symbol(const std::function<double(double)>& M,
                              double alpha, double h, int m,
                              WeightFamily label = WeightFamily::SP);

/// Weight table as CSV, header `k,w_k`, 17 significant digits.
void write_weights_csv(const WeightSet& ws, std::ostream& out);

}  // namespace flap
