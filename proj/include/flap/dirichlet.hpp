#pragma once

#include <functional>
#include <vector>

#include "flap/grid.hpp"
#include "flap/weights.hpp"

// The extended Dirichlet problem on D = (-halfwidth, halfwidth): operator
// rows restricted to interior unknowns, exterior data moved to the right
// hand side, dense direct solve. The matrix is symmetric Toeplitz.

namespace flap {

struct DirichletProblem {
  WeightSet ws;
  double halfwidth = 1.0;
  std::function<double(double)> f;          // right-hand side on the interior
  std::function<double(double)> g;          // exterior data (nullptr = 0)
  double g_radius = 0.0;                    // sample g on [halfwidth, g_radius]
};

/// Dense system A u = b, row-major; entry (j, j') = -w_{j-j'}.
struct LinearSystem {
  long n = 0;
  std::vector<double> A;  // n * n, row-major
  std::vector<double> b;
};

/// Interior index half-count: interior grid indices are |j| <= n_interior,
/// with halfwidth/h required to be an integer (the boundary lies on the
/// exterior grid). Throws std::invalid_argument otherwise.
long interior_halfcount(const DirichletProblem& p);

LinearSystem assemble(const DirichletProblem& p);

/// Direct factorization solve; verifies the residual to 1e-10 relative.
/// Returns the interior samples as a GridField.
GridField solve(const DirichletProblem& p);

/// Maximum-principle verdict: if (-Delta_h)^{alpha/2} u <= tol on the
/// interior index range [j_lo, j_hi] (absolute grid indices), checks
/// max_interior <= max_exterior + tol. Vacuously true when the hypothesis
/// fails. Field values outside the window count as zero exterior data.
bool check_max_principle(const WeightSet& ws, const GridField& u, long j_lo,
                         long j_hi, double tol = 1e-12);

struct SupersolutionVerdict {
  bool ok;
  double min_value;
};

/// Samples v_G = K_alpha (1-x^2)_+^{alpha/2} on Z_h, applies the scheme on
/// the interior of (-1, 1) and reports whether the minimum is >= 1.
SupersolutionVerdict check_supersolution_vG(WeightFamily family, double alpha,
                                            double h);

}  // namespace flap
