#include "flap/dirichlet.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "flap/operator.hpp"
#include "flap/oracle.hpp"

namespace flap {

long interior_halfcount(const DirichletProblem& p) {
  const double ratio = p.halfwidth / p.ws.h;
  const long nh = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(nh)) > 1e-9)
    throw std::invalid_argument(
        "dirichlet: halfwidth/h must be an integer so the boundary lies on the grid");
  return nh - 1;
}

LinearSystem assemble(const DirichletProblem& p) {
  const long nin = interior_halfcount(p);
  const long n = 2 * nin + 1;
  if (p.ws.m < 2 * nin)
    throw std::invalid_argument("dirichlet: weight set too short (need m >= 2 nin)");

  LinearSystem sys;
  sys.n = n;
  sys.A.assign(static_cast<size_t>(n) * n, 0.0);
  sys.b.assign(static_cast<size_t>(n), 0.0);
  const double h = p.ws.h;
  for (long r = 0; r < n; ++r) {
    const long j = r - nin;
    for (long c = 0; c < n; ++c) {
      const long d = std::abs(j - (c - nin));
      sys.A[static_cast<size_t>(r) * n + c] = -p.ws.w[static_cast<size_t>(d)];
    }
    double rhs = p.f ? p.f(j * h) : 0.0;
    if (p.g && p.g_radius > p.halfwidth) {
      const long k_max = std::min<long>(std::lround(p.g_radius / h), j + p.ws.m);
      for (long k = nin + 1; k <= k_max; ++k) {
        if (std::abs(j - k) <= p.ws.m)
          rhs += p.ws.w[static_cast<size_t>(std::abs(j - k))] * p.g(k * h);
        if (std::abs(j + k) <= p.ws.m)
          rhs += p.ws.w[static_cast<size_t>(std::abs(j + k))] * p.g(-k * h);
      }
    }
    sys.b[static_cast<size_t>(r)] = rhs;
  }
  return sys;
}

GridField solve(const DirichletProblem& p) {
  LinearSystem sys = assemble(p);
  const long n = sys.n;
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      A(sys.A.data(), n, n);
  Eigen::Map<Eigen::VectorXd> b(sys.b.data(), n);
  Eigen::VectorXd x = A.partialPivLu().solve(b);
  const double bnorm = b.lpNorm<Eigen::Infinity>();
  const double res = (A * x - b).lpNorm<Eigen::Infinity>();
  if (!(res <= 1e-10 * (bnorm + 1e-300)))
    throw std::runtime_error("dirichlet solve: residual exceeds 1e-10 relative");
  std::vector<double> u(x.data(), x.data() + n);
  return GridField(p.ws.h, -(n - 1) / 2, std::move(u));
}

bool check_max_principle(const WeightSet& ws, const GridField& u, long j_lo,
                         long j_hi, double tol) {
  const long i_lo = j_lo - u.j0;
  const long i_hi = j_hi - u.j0;
  if (i_lo < 0 || i_hi >= u.size() || i_lo > i_hi)
    throw std::invalid_argument("check_max_principle: interior outside field");
  const std::vector<double> lu = apply_direct(ws, u, i_lo, i_hi);
  double max_lu = lu[0];
  double max_int = u.u[static_cast<size_t>(i_lo)];
  for (long i = i_lo; i <= i_hi; ++i) {
    max_lu = std::max(max_lu, lu[static_cast<size_t>(i - i_lo)]);
    max_int = std::max(max_int, u.u[static_cast<size_t>(i)]);
  }
  if (max_lu > tol) return true;  // hypothesis fails; nothing to check
  double max_ext = 0.0;  // values beyond the window are zero exterior data
  for (long i = 0; i < u.size(); ++i) {
    if (i >= i_lo && i <= i_hi) continue;
    max_ext = std::max(max_ext, u.u[static_cast<size_t>(i)]);
  }
  return max_int <= max_ext + tol;
}

SupersolutionVerdict check_supersolution_vG(WeightFamily family, double alpha,
                                            double h) {
  const double ratio = 1.0 / h;
  const long nh = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(nh)) > 1e-9)
    throw std::invalid_argument("check_supersolution_vG: 1/h must be an integer");
  const double K = exit_time_constant(alpha);
  WeightSet ws = make_weights(family, alpha, h, static_cast<int>(2 * nh + 2));
  GridField v = make_field(1.0, h, [&](double x) {
    const double s = 1.0 - x * x;
    return s > 0.0 ? K * std::pow(s, alpha / 2.0) : 0.0;
  });
  const std::vector<double> lv = apply_direct(ws, v, 1, v.size() - 2);
  double mn = lv[0];
  for (double val : lv) mn = std::min(mn, val);
  return SupersolutionVerdict{mn >= 1.0 - 1e-12, mn};
}

}  // namespace flap
