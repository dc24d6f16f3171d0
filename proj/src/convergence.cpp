#include "flap/convergence.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "flap/dirichlet.hpp"
#include "flap/operator.hpp"
#include "flap/oracle.hpp"
#include "flap/specfun.hpp"

namespace flap {

double fit_slope(const std::vector<ConvergencePoint>& points, long* begin,
                 long* end) {
  const long n = static_cast<long>(points.size());
  if (n < 2) throw std::invalid_argument("fit_slope: need at least two points");
  for (long i = 1; i < n; ++i)
    if (!(points[static_cast<size_t>(i)].h < points[static_cast<size_t>(i - 1)].h))
      throw std::invalid_argument("fit_slope: h must be strictly decreasing");

  // Fit set: the maximal strictly-decreasing suffix (drops coarse-h
  // pre-asymptotic wiggle; a fully monotone sequence enters whole). If the
  // curve has levelled off instead (no decreasing suffix), fall back to the
  // leading decreasing run clear of the saturation floor, 3x the smallest-h
  // error.
  long lo = n - 1, hi = n;
  while (lo > 0 && points[static_cast<size_t>(lo - 1)].err >
                       points[static_cast<size_t>(lo)].err)
    --lo;
  if (hi - lo < 2) {
    const double floor_err = 3.0 * points[static_cast<size_t>(n - 1)].err;
    lo = 0;
    hi = 1;
    while (hi < n &&
           points[static_cast<size_t>(hi)].err <
               points[static_cast<size_t>(hi - 1)].err &&
           points[static_cast<size_t>(hi - 1)].err > floor_err)
      ++hi;
  }
  if (hi - lo < 2) throw std::runtime_error("fit_slope: fewer than two usable points");
  if (begin) *begin = lo;
  if (end) *end = hi;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double cnt = static_cast<double>(hi - lo);
  for (long i = lo; i < hi; ++i) {
    const double x = std::log(points[static_cast<size_t>(i)].h);
    const double y = std::log(points[static_cast<size_t>(i)].err);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

namespace {

ConvergenceReport origin_sweep(WeightFamily family, double alpha,
                               const std::vector<double>& hs, double window,
                               const std::function<double(double)>& fn,
                               double exact) {
  ConvergenceReport rep;
  rep.family = family;
  rep.alpha = alpha;
  for (double h : hs) {
    GridField f = make_field(window, h, fn);
    const long center = (f.size() - 1) / 2;
    const long m = std::lround(window / h) + 2;
    WeightSet ws = make_weights(family, alpha, h, static_cast<int>(m));
    const double val = apply_direct(ws, f, center, center)[0];
    rep.points.push_back({h, std::abs(val - exact)});
  }
  rep.fitted_slope = fit_slope(rep.points, &rep.fit_begin, &rep.fit_end);
  return rep;
}

}  // namespace

ConvergenceReport converge_gaussian_origin(WeightFamily family, double alpha,
                                           const std::vector<double>& hs) {
  return origin_sweep(family, alpha, hs, 8.0,
                      [](double x) { return std::exp(-x * x); },
                      flap_gaussian_origin(alpha));
}

ConvergenceReport converge_beta_bump_origin(int k, WeightFamily family,
                                            double alpha,
                                            const std::vector<double>& hs) {
  const double kk = k + alpha / 2.0;
  return origin_sweep(family, alpha, hs, 1.0,
                      [kk](double x) {
                        const double s = 1.0 - x * x;
                        return s > 0.0 ? std::pow(s, kk) : 0.0;
                      },
                      beta_bump_constant(k, alpha));
}

ConvergenceReport converge_dirichlet(int k, WeightFamily family, double alpha,
                                     const std::vector<double>& hs) {
  ConvergenceReport rep;
  rep.family = family;
  rep.alpha = alpha;
  for (double h : hs) {
    const long nh = std::lround(1.0 / h);
    DirichletProblem p;
    p.ws = make_weights(family, alpha, h, static_cast<int>(2 * nh));
    p.halfwidth = 1.0;
    p.f = [k, alpha](double x) {
      return beta_bump_constant(k, alpha) *
             gauss_2f1((1.0 + alpha) / 2.0, -static_cast<double>(k), 0.5, x * x);
    };
    GridField u = solve(p);
    double err = 0.0;
    for (long i = 0; i < u.size(); ++i) {
      const double x = u.x(i);
      const double exact = std::pow(1.0 - x * x, k + alpha / 2.0);
      err = std::max(err, std::abs(u.u[static_cast<size_t>(i)] - exact));
    }
    rep.points.push_back({h, err});
  }
  rep.fitted_slope = fit_slope(rep.points, &rep.fit_begin, &rep.fit_end);
  return rep;
}

std::vector<TailSweepPoint> lorentzian_tail_sweep(WeightFamily family,
                                                  double alpha, double beta,
                                                  double L,
                                                  const std::vector<double>& hs) {
  std::vector<TailSweepPoint> out;
  for (double h : hs) {
    auto fn = [alpha](double x) {
      return std::pow(1.0 + x * x, -(1.0 - alpha) / 2.0);
    };
    GridField f = make_field(L, h, fn);
    const long nl = std::lround(L / h);
    const long M = std::lround(3.0 * L / h);
    WeightSet ws = make_weights(family, alpha, h, static_cast<int>(M + nl));

    TailSpec tail = tail_from_field(f, beta, 3.0 * L);
    const std::vector<double> corr = apply_truncated(ws, f, tail);
    const std::vector<double> zero = apply_direct(ws, f);

    double e_corr = 0.0, e_zero = 0.0;
    for (long i = 0; i < f.size(); ++i) {
      const double exact = flap_lorentzian(alpha, f.x(i));
      e_corr = std::max(e_corr, std::abs(corr[static_cast<size_t>(i)] - exact));
      e_zero = std::max(e_zero, std::abs(zero[static_cast<size_t>(i)] - exact));
    }
    out.push_back({h, e_corr, e_zero});
  }
  return out;
}

}  // namespace flap
