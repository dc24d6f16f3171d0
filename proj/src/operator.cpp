#include "flap/operator.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "flap/specfun.hpp"

namespace flap {

namespace {

// FFTW plan creation/destruction is not thread safe; execution is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

long next_pow2(long n) {
  long p = 1;
  while (p < n) p <<= 1;
  return p;
}

void check_grid(const WeightSet& ws, const GridField& f) {
  if (std::abs(ws.h - f.h) > 1e-12 * ws.h)
    throw std::invalid_argument("operator: weight/field grid spacing mismatch");
}

}  // namespace

std::vector<double> apply_direct(const WeightSet& ws, const GridField& f,
                                 long i_lo, long i_hi) {
  check_grid(ws, f);
  if (i_lo < 0 || i_hi >= f.size() || i_lo > i_hi)
    throw std::invalid_argument("apply_direct: range out of bounds");
  const long n = f.size();
  const long m = ws.m;
  std::vector<double> out(static_cast<size_t>(i_hi - i_lo + 1));
  for (long i = i_lo; i <= i_hi; ++i) {
    double s = f.u[static_cast<size_t>(i)] * ws.w[0];
    for (long k = std::max(-m, i - n + 1); k <= std::min(m, i); ++k) {
      if (k == 0) continue;
      s += f.u[static_cast<size_t>(i - k)] * ws.w[static_cast<size_t>(std::abs(k))];
    }
    out[static_cast<size_t>(i - i_lo)] = -s;
  }
  return out;
}

std::vector<double> apply_direct(const WeightSet& ws, const GridField& f) {
  return apply_direct(ws, f, 0, f.size() - 1);
}

FastConvolver::FastConvolver(const WeightSet& ws, long n_field) {
  n_ = n_field;
  pad_ = next_pow2(n_field + 2 * ws.m);
  buf_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * static_cast<size_t>(pad_)));
  if (!buf_) throw std::bad_alloc();
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(pad_),
                            reinterpret_cast<fftw_complex*>(buf_),
                            reinterpret_cast<fftw_complex*>(buf_),
                            FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(static_cast<int>(pad_),
                            reinterpret_cast<fftw_complex*>(buf_),
                            reinterpret_cast<fftw_complex*>(buf_),
                            FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  // Kernel transform, computed once: K[d] = w_d, K[pad - d] = w_d.
  for (long i = 0; i < pad_; ++i) buf_[i] = 0.0;
  buf_[0] = ws.w[0];
  for (long k = 1; k <= ws.m; ++k) {
    buf_[k] = ws.w[static_cast<size_t>(k)];
    buf_[pad_ - k] = ws.w[static_cast<size_t>(k)];
  }
  fftw_execute(static_cast<fftw_plan>(fwd_));
  kernel_hat_.assign(buf_, buf_ + pad_);
}

FastConvolver::~FastConvolver() {
  std::lock_guard<std::mutex> lock(fftw_mutex());
  if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
  if (buf_) fftw_free(buf_);
}

std::vector<double> FastConvolver::apply(const std::vector<double>& u) const {
  if (static_cast<long>(u.size()) != n_)
    throw std::invalid_argument("FastConvolver: field length changed");
  for (long i = 0; i < n_; ++i) buf_[i] = u[static_cast<size_t>(i)];
  for (long i = n_; i < pad_; ++i) buf_[i] = 0.0;
  fftw_execute(static_cast<fftw_plan>(fwd_));
  for (long i = 0; i < pad_; ++i) buf_[i] *= kernel_hat_[static_cast<size_t>(i)];
  fftw_execute(static_cast<fftw_plan>(bwd_));
  std::vector<double> out(static_cast<size_t>(n_));
  const double scale = -1.0 / static_cast<double>(pad_);
  for (long i = 0; i < n_; ++i)
    out[static_cast<size_t>(i)] = scale * buf_[i].real();
  return out;
}

std::vector<double> apply_fast(const WeightSet& ws, const GridField& f) {
  check_grid(ws, f);
  FastConvolver conv(ws, f.size());
  return conv.apply(f.u);
}

std::vector<double> apply_difference(const WeightSet& ws, const GridField& f,
                                     double fill_left, double fill_right) {
  check_grid(ws, f);
  const long n = f.size();
  const long m = ws.m;
  std::vector<double> out(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double ui = f.u[static_cast<size_t>(i)];
    double s = 0.0;
    for (long k = 1; k <= m; ++k) {
      const double wk = ws.w[static_cast<size_t>(k)];
      const long il = i - k;
      const long ir = i + k;
      const double vl = (il >= 0) ? f.u[static_cast<size_t>(il)] : fill_left;
      const double vr = (ir < n) ? f.u[static_cast<size_t>(ir)] : fill_right;
      s += (2.0 * ui - vl - vr) * wk;
    }
    out[static_cast<size_t>(i)] = s;
  }
  return out;
}

double energy(const WeightSet& ws, const GridField& f) {
  const long n = f.size();
  const long m = ws.m;
  // The k < 0 half of the double sum duplicates the k > 0 half (swap j and
  // j - k), so sum k >= 1 and double it; the |k| > m closure under zero
  // extension contributes (h/2) T_m sum u_j^2.
  double acc = 0.0;
  for (long j = -m; j < n + m; ++j) {
    const double uj = f.at_index(f.j0 + j);
    for (long k = 1; k <= m; ++k) {
      const double d = uj - f.at_index(f.j0 + j - k);
      acc += d * d * ws.w[static_cast<size_t>(k)];
    }
  }
  double sum_sq = 0.0;
  for (double v : f.u) sum_sq += v * v;
  return f.h / 2.0 * acc + f.h / 2.0 * ws.tail_mass() * sum_sq;
}

std::complex<double> sdft(const GridField& f, double xi) {
  std::complex<double> s = 0.0;
  for (long i = 0; i < f.size(); ++i) {
    const double x = f.x(i);
    s += f.u[static_cast<size_t>(i)] *
         std::complex<double>(std::cos(xi * x), -std::sin(xi * x));
  }
  return f.h * s;
}

double fit_beta(const GridField& f, double offset_left, double offset_right,
                double fit_fraction) {
  const long n = f.size();
  const long tail_n = std::max<long>(4, static_cast<long>(n * fit_fraction));
  auto side_slope = [&](bool right) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = 0;
    for (long t = 0; t < tail_n; ++t) {
      const long i = right ? n - 1 - t : t;
      const double off = right ? offset_right : offset_left;
      const double v = std::abs(f.u[static_cast<size_t>(i)] - off);
      const double x = std::abs(f.x(i));
      if (v <= 0.0 || x <= 0.0) continue;
      const double lx = std::log(x), ly = std::log(v);
      sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
      ++cnt;
    }
    if (cnt < 2) throw std::runtime_error("fit_beta: not enough usable samples");
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  };
  return -0.5 * (side_slope(false) + side_slope(true));
}

TailSpec tail_from_field(const GridField& f, double beta, double L_M,
                         double offset_left, double offset_right,
                         double fit_fraction) {
  TailSpec t;
  t.L = f.x(f.size() - 1);
  if (std::abs(f.x(0) + t.L) > 1e-9 * (1.0 + t.L))
    throw std::invalid_argument("tail_from_field: window must be symmetric");
  t.L_M = (L_M > 0.0) ? L_M : 3.0 * t.L;
  t.u_left = f.u.front();
  t.u_right = f.u.back();
  t.offset_left = offset_left;
  t.offset_right = offset_right;
  t.beta =
      (beta > 0.0) ? beta : fit_beta(f, offset_left, offset_right, fit_fraction);
  if (!(t.beta > 0.0)) throw std::runtime_error("tail_from_field: beta <= 0");
  return t;
}

double tail_correction(double alpha, const TailSpec& tail, double x_j,
                       double u_j) {
  if (!(std::abs(x_j) <= tail.L) || !(tail.L < tail.L_M))
    throw std::domain_error("tail_correction: requires |x_j| <= L < L_M");
  const double C = riesz_constant(alpha);
  const double b = tail.beta;
  const double lm = tail.L_M;
  const double part2 = C / alpha *
                       ((u_j - tail.offset_right) * std::pow(lm - x_j, -alpha) +
                        (u_j - tail.offset_left) * std::pow(lm + x_j, -alpha));
  const double pre =
      C * std::pow(tail.L, b) / ((alpha + b) * std::pow(lm, alpha + b));
  const double part3 =
      pre * ((tail.u_right - tail.offset_right) *
                 gauss_2f1(alpha + 1.0, alpha + b, alpha + b + 1.0, x_j / lm) +
             (tail.u_left - tail.offset_left) *
                 gauss_2f1(alpha + 1.0, alpha + b, alpha + b + 1.0, -x_j / lm));
  return part2 - part3;
}

std::vector<double> apply_truncated(const WeightSet& ws, const GridField& f,
                                    const TailSpec& tail) {
  check_grid(ws, f);
  const double h = f.h;
  const long n = f.size();
  const long nl = std::lround(tail.L / h);
  if (std::abs(f.x(0) + tail.L) > 1e-9 || n != 2 * nl + 1)
    throw std::invalid_argument("apply_truncated: field window must be [-L, L]");

  const long M = std::lround(tail.L_M / h);
  TailSpec eff = tail;
  eff.L_M = (M + 0.5) * h;  // snap the extension radius to the grid
  if (ws.m < M + nl)
    throw std::invalid_argument("apply_truncated: weight set too short (need m >= M + L/h)");

  // Exterior fill by the algebraic asymptote.
  std::vector<double> ext(static_cast<size_t>(2 * M + 1));
  const double amp_l = (tail.u_left - tail.offset_left) * std::pow(tail.L, tail.beta);
  const double amp_r = (tail.u_right - tail.offset_right) * std::pow(tail.L, tail.beta);
  for (long k = -M; k <= M; ++k) {
    double v;
    if (k < -nl)
      v = tail.offset_left + amp_l * std::pow(std::abs(k * h), -tail.beta);
    else if (k > nl)
      v = tail.offset_right + amp_r * std::pow(k * h, -tail.beta);
    else
      v = f.u[static_cast<size_t>(k + nl)];
    ext[static_cast<size_t>(k + M)] = v;
  }

  // Prefix sums of the kernel give W_j = sum_{|k| <= M} w_{j-k} in O(1).
  std::vector<double> prefix(static_cast<size_t>(2 * (M + nl) + 2), 0.0);
  for (long d = -(M + nl); d <= M + nl; ++d)
    prefix[static_cast<size_t>(d + M + nl + 1)] =
        prefix[static_cast<size_t>(d + M + nl)] +
        ws.w[static_cast<size_t>(std::abs(d))];

  // Correlation sum_{k} ext_k w_{j-k} over the extended window.
  const bool use_fft = n * (2 * M + 1) > (1 << 21);
  std::vector<double> conv;
  if (use_fft) {
    GridField ef(h, -M, ext);
    conv = apply_fast(ws, ef);  // returns -sum ext_{j-k} w_k on ext window
  }

  std::vector<double> out(static_cast<size_t>(n));
  for (long j = -nl; j <= nl; ++j) {
    const double uj = f.u[static_cast<size_t>(j + nl)];
    const double Wj = prefix[static_cast<size_t>(j + M + M + nl + 1)] -
                      prefix[static_cast<size_t>(j - M + M + nl)];
    double cross;
    if (use_fft) {
      cross = -conv[static_cast<size_t>(j + M)];
    } else {
      cross = 0.0;
      for (long k = -M; k <= M; ++k)
        cross += ext[static_cast<size_t>(k + M)] *
                 ws.w[static_cast<size_t>(std::abs(j - k))];
    }
    out[static_cast<size_t>(j + nl)] =
        uj * Wj - cross + tail_correction(ws.alpha, eff, j * h, uj);
  }
  return out;
}

}  // namespace flap
