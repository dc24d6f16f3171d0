#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace flap {

/// Samples of a function on the uniform grid x = j h over a finite window.
/// u[i] is the value at x = (j0 + i) h.
struct GridField {
  double h = 1.0;
  long j0 = 0;               // grid index of the left-most sample
  std::vector<double> u;

  GridField() = default;
  GridField(double h_, long j0_, std::vector<double> u_)
      : h(h_), j0(j0_), u(std::move(u_)) {
    if (u.empty()) throw std::invalid_argument("GridField: empty field");
    if (!(h > 0.0)) throw std::invalid_argument("GridField: h must be > 0");
  }

  long size() const { return static_cast<long>(u.size()); }
  double x(long i) const { return (j0 + i) * h; }
  long j_last() const { return j0 + size() - 1; }

  /// Value at absolute grid index j; 0 outside the window.
  double at_index(long j) const {
    const long i = j - j0;
    return (i >= 0 && i < size()) ? u[static_cast<size_t>(i)] : 0.0;
  }
};

/// Sample fn on the symmetric window [-L, L]; L/h must be within 1e-9 of an
/// integer so the endpoints land on grid points.
inline GridField make_field(double L, double h,
                            const std::function<double(double)>& fn) {
  const double n_real = L / h;
  const long n = std::lround(n_real);
  if (std::abs(n_real - static_cast<double>(n)) > 1e-9)
    throw std::invalid_argument("make_field: L/h is not an integer");
  std::vector<double> u(static_cast<size_t>(2 * n + 1));
  for (long i = 0; i <= 2 * n; ++i)
    u[static_cast<size_t>(i)] = fn((i - n) * h);
  return GridField(h, -n, std::move(u));
}

/// l2(Z_h) inner product h sum u_j v_j over the overlap of the two windows.
inline double inner_product(const GridField& a, const GridField& b) {
  if (a.h != b.h) throw std::invalid_argument("inner_product: grid mismatch");
  const long lo = std::max(a.j0, b.j0);
  const long hi = std::min(a.j_last(), b.j_last());
  double s = 0.0;
  for (long j = lo; j <= hi; ++j) s += a.at_index(j) * b.at_index(j);
  return a.h * s;
}

}  // namespace flap
