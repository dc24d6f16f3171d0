#pragma once

#include <complex>
#include <vector>

#include "flap/grid.hpp"
#include "flap/weights.hpp"

// Application of the discrete operator to grid fields. Under zero
// extension the scheme with the full-convention w_0 collapses to the
// finite convolution
//   (-Delta_h)^{alpha/2} u_j = - sum_{|k| <= m} u_{j-k} w_k,
// which is what apply_direct/apply_fast evaluate (the infinite sum over
// Z with u = 0 outside the window, exactly). apply_difference keeps the
// truncated difference form instead, whose explicit-Euler update has unit
// column sums (mass-exact time stepping). apply_truncated adds the
// algebraic far-field closure.

namespace flap {

/// out[i] = operator at field index i (zero extension), for i in
/// [i_lo, i_hi] (0-based positions within the field window).
std::vector<double> apply_direct(const WeightSet& ws, const GridField& f,
                                 long i_lo, long i_hi);
std::vector<double> apply_direct(const WeightSet& ws, const GridField& f);

/// Same result as apply_direct over the whole window, one circular FFT
/// convolution zero-padded to a power of two >= N + 2m.
std::vector<double> apply_fast(const WeightSet& ws, const GridField& f);

/// Cached-plan convolver for repeated application on fields of fixed size
/// (time stepping). Reentrant; each instance owns its buffers.
class FastConvolver {
 public:
  FastConvolver(const WeightSet& ws, long n_field);
  ~FastConvolver();
  FastConvolver(const FastConvolver&) = delete;
  FastConvolver& operator=(const FastConvolver&) = delete;

  /// Returns -sum_{|k| <= m} u_{j-k} w_k for every j in the window.
  std::vector<double> apply(const std::vector<double>& u) const;

 private:
  long n_;
  long pad_;
  void* fwd_ = nullptr;   // fftw plans
  void* bwd_ = nullptr;
  std::complex<double>* buf_ = nullptr;
  std::vector<std::complex<double>> kernel_hat_;
};

/// Truncated difference form sum_{|k| <= m} (u_j - v_{j-k}) w_k with
/// out-of-window values filled by per-side constants. The corresponding
/// explicit heat update conserves window mass exactly while the data stays
/// clear of the edges.
std::vector<double> apply_difference(const WeightSet& ws, const GridField& f,
                                     double fill_left, double fill_right);

/// Discrete energy E[u] = (h/4) sum_j sum_k |u_j - u_{j-k}|^2 w_k under
/// zero extension (the |k| > m closure contributes (h/2) T_m sum u_j^2),
/// so E[u] = (1/2) <apply_direct(u), u> holds to rounding.
double energy(const WeightSet& ws, const GridField& f);

/// Semi-discrete Fourier transform u_hat(xi) = h sum_j e^{-i xi x_j} u_j.
std::complex<double> sdft(const GridField& f, double xi);

/// Algebraic far-field description: u(y) ~ offset + (u(+-L) - offset)
/// L^beta |y|^{-beta} beyond the window edge +-L, with independent offsets
/// per side (sign-like profiles use -1/+1).
struct TailSpec {
  double beta = 1.0;        // decay exponent, > 0
  double L = 1.0;           // window edge
  double L_M = 3.0;         // extension radius, >= L (default 3L keeps the
                            // 2F1 argument <= 1/3)
  double u_left = 0.0;      // u(-L)
  double u_right = 0.0;     // u(+L)
  double offset_left = 0.0;
  double offset_right = 0.0;
};

/// Build a TailSpec from a field's edge samples. beta <= 0 requests a
/// log-log fit on the outer `fit_fraction` of the window.
TailSpec tail_from_field(const GridField& f, double beta, double L_M = 0.0,
                         double offset_left = 0.0, double offset_right = 0.0,
                         double fit_fraction = 0.1);

/// Least-squares decay exponent of |u - offset| on the outer fraction of
/// the window (both sides averaged).
double fit_beta(const GridField& f, double offset_left, double offset_right,
                double fit_fraction = 0.1);

/// Far-field correction (II) - (III) at x_j for the given sample value u_j:
/// the exact integral of the constant part beyond L_M minus the
/// hypergeometric closed form of the algebraic tail beyond L_M.
double tail_correction(double alpha, const TailSpec& tail, double x_j,
                       double u_j);

/// Operator with the far-field closure: difference form over the extension
/// radius L_M = (M + 1/2) h with exterior values in (L, L_M] filled by the
/// asymptote, plus tail_correction beyond. The field window must be
/// [-L, L]; requires ws.m >= M + L/h.
std::vector<double> apply_truncated(const WeightSet& ws, const GridField& f,
                                    const TailSpec& tail);

}  // namespace flap
