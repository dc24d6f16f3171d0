#include "flap/weights.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "flap/quadrature.hpp"
#include "flap/specfun.hpp"

namespace flap {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;

// Gamma(num)/Gamma(den) for positive arguments, via log differences once
// the arguments are large enough to threaten overflow.
double gamma_ratio(double num, double den) {
  if (num < 20.0 && den < 20.0) return gamma(num) / gamma(den);
  return std::exp(log_gamma(num) - log_gamma(den));
}

void check_alpha(WeightFamily family, double alpha) {
  const bool open_top = (family == WeightFamily::T || family == WeightFamily::Q);
  if (!(alpha > 0.0) || alpha > 2.0 || (open_top && alpha >= 2.0))
    throw std::domain_error(std::string(family_name(family)) +
                            ": alpha outside admissible range");
}

double sp_weight(double alpha, double h, int k) {
  if (k == 0) return -std::pow(kPi, alpha) / (1.0 + alpha) * std::pow(h, -alpha);
  if (alpha == 1.0) return (1.0 - ((k % 2 == 0) ? 1.0 : -1.0)) / (k * (double)k * kPi * h);
  if (alpha == 2.0) return 2.0 * ((k % 2 == 0) ? -1.0 : 1.0) / (k * (double)k * h * h);
  // First line of the incomplete-gamma form: the antiderivative of
  // xi^alpha e^{ik xi} is (-ik)^{-alpha-1} gamma(alpha+1, -ik xi).
  const Complex z(0.0, -kPi * k);
  const Complex diff = upper_incomplete_gamma(alpha + 1.0, z) - Complex(gamma(alpha + 1.0), 0.0);
  const Complex phase = std::exp(Complex(0.0, kPi * (alpha + 1.0) / 2.0));
  const double val = (phase * diff).real();
  return std::pow(h, -alpha) / kPi * std::pow((double)k, -alpha - 1.0) * val;
}

double per_weight(double alpha, double h, int k) {
  if (k == 0)
    return -4.0 * gamma(alpha) / (alpha * gamma(alpha / 2.0) * gamma(alpha / 2.0)) *
           std::pow(h, -alpha);
  if (alpha == 2.0) return (k == 1) ? 1.0 / (h * h) : 0.0;
  return std::pow(h, -alpha) * sin_pi(alpha / 2.0) * gamma(1.0 + alpha) / kPi *
         gamma_ratio(k - alpha / 2.0, k + 1.0 + alpha / 2.0);
}

double gl_weight(double alpha, double h, int k) {
  if (alpha == 1.0) {
    if (k == 0) return -2.0 / (kPi * h);
    return 1.0 / (kPi * h * k * (k + 1.0));
  }
  const double c = cos_pi(alpha / 2.0);
  if (k == 0) {
    return (alpha < 1.0 ? -1.0 : alpha) / (std::pow(h, alpha) * c);
  }
  // 1/Gamma(1-alpha) via reflection keeps alpha in (1, 2] in one code path
  // (it vanishes cleanly at alpha = 2).
  const double inv_gamma_1ma = gamma(alpha) * sin_pi(alpha) / kPi;
  const double pre = std::pow(h, -alpha) / (2.0 * c);
  if (alpha < 1.0)
    return pre * alpha * gamma_ratio(k - alpha, k + 1.0) * inv_gamma_1ma;
  if (k == 1) return -pre * (1.0 + alpha * (alpha - 1.0) / 2.0);
  return pre * alpha * gamma_ratio(k + 1.0 - alpha, k + 2.0) * inv_gamma_1ma;
}

// Auxiliary functions with F'' = G''' = t^{-1-alpha}; G' = F and
// F'(1) = G''(1) = -1/alpha for every alpha in (0, 2).
double aux_F(double alpha, double t) {
  if (alpha == 1.0) return -std::log(t);
  return std::pow(t, 1.0 - alpha) / ((alpha - 1.0) * alpha);
}

double aux_G(double alpha, double t) {
  if (alpha == 1.0) return t - t * std::log(t);
  return std::pow(t, 2.0 - alpha) / ((2.0 - alpha) * (alpha - 1.0) * alpha);
}

// Smooth form of C_{1,alpha}, no Gamma pole as alpha -> 2.
double c1_alpha_smooth(double alpha) {
  return gamma(1.0 + alpha) * sin_pi(alpha / 2.0) / kPi;
}

double t_weight(double alpha, double h, int k) {
  const double C = c1_alpha_smooth(alpha) * std::pow(h, -alpha);
  if (k == 0) return -2.0 * C * (1.0 / (2.0 - alpha) + 1.0 / alpha);
  if (k == 1)
    return C * (1.0 / (2.0 - alpha) + 1.0 / alpha + aux_F(alpha, 2.0) - aux_F(alpha, 1.0));
  return C * (aux_F(alpha, k + 1.0) - 2.0 * aux_F(alpha, (double)k) + aux_F(alpha, k - 1.0));
}

double q_weight(double alpha, double h, int k) {
  const double C = c1_alpha_smooth(alpha) * std::pow(h, -alpha);
  if (k == 0) return -2.0 * C * (1.0 / (2.0 - alpha) + 1.0 / alpha);
  if (k == 1)
    return C * (1.0 / (2.0 - alpha) + 1.0 / alpha -
                (aux_F(alpha, 3.0) + 3.0 * aux_F(alpha, 1.0)) / 2.0 +
                aux_G(alpha, 3.0) - aux_G(alpha, 1.0));
  if (k % 2 == 0)
    return 2.0 * C *
           (aux_F(alpha, k + 1.0) + aux_F(alpha, k - 1.0) -
            aux_G(alpha, k + 1.0) + aux_G(alpha, k - 1.0));
  return C * (-(aux_F(alpha, k + 2.0) + 6.0 * aux_F(alpha, (double)k) +
                aux_F(alpha, k - 2.0)) / 2.0 +
              aux_G(alpha, k + 2.0) - aux_G(alpha, k - 2.0));
}

}  // namespace

const char* family_name(WeightFamily f) {
  switch (f) {
    case WeightFamily::SP: return "SP";
    case WeightFamily::PER: return "PER";
    case WeightFamily::GL: return "GL";
    case WeightFamily::T: return "T";
    case WeightFamily::Q: return "Q";
  }
  return "?";
}

WeightFamily family_from_name(const std::string& name) {
  if (name == "SP" || name == "sp") return WeightFamily::SP;
  if (name == "PER" || name == "per") return WeightFamily::PER;
  if (name == "GL" || name == "gl") return WeightFamily::GL;
  if (name == "T" || name == "t") return WeightFamily::T;
  if (name == "Q" || name == "q") return WeightFamily::Q;
  throw std::invalid_argument("unknown weight family: " + name);
}

double WeightSet::tail_mass() const {
  double s = 0.0;
  for (int k = m; k >= 1; --k) s += w[static_cast<size_t>(k)];
  return -(w[0] + 2.0 * s);
}

WeightSet make_weights(WeightFamily family, double alpha, double h, int m) {
  if (!(h > 0.0)) throw std::domain_error("make_weights: h must be > 0");
  if (m < 1) throw std::domain_error("make_weights: m must be >= 1");
  check_alpha(family, alpha);

  WeightSet ws;
  ws.family = family;
  ws.alpha = alpha;
  ws.h = h;
  ws.m = m;
  ws.w.resize(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    double v = 0.0;
    switch (family) {
      case WeightFamily::SP: v = sp_weight(alpha, h, k); break;
      case WeightFamily::PER: v = per_weight(alpha, h, k); break;
      case WeightFamily::GL: v = gl_weight(alpha, h, k); break;
      case WeightFamily::T: v = t_weight(alpha, h, k); break;
      case WeightFamily::Q: v = q_weight(alpha, h, k); break;
    }
    if (!std::isfinite(v))
      throw std::runtime_error("make_weights: non-finite weight");
    ws.w[static_cast<size_t>(k)] = v;
  }
  return ws;
}

double cfl_cmax(WeightFamily family, double alpha) {
  switch (family) {
    case WeightFamily::SP:
      if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("cfl_cmax: SP requires alpha in (0, 1)");
      return std::pow(kPi, -alpha) * (1.0 + alpha);
    case WeightFamily::PER:
      check_alpha(family, alpha);
      return alpha * gamma(alpha / 2.0) * gamma(alpha / 2.0) / (4.0 * gamma(alpha));
    case WeightFamily::GL:
      check_alpha(family, alpha);
      if (alpha == 1.0) return kPi / 2.0;
      if (alpha < 1.0) return cos_pi(alpha / 2.0);
      return -cos_pi(alpha / 2.0) / alpha;
    case WeightFamily::T:
    case WeightFamily::Q:
      check_alpha(family, alpha);
      return kSqrtPi * gamma(2.0 - alpha / 2.0) /
             (std::pow(2.0, alpha) * gamma((1.0 + alpha) / 2.0));
  }
  throw std::domain_error("cfl_cmax: unknown family");
}

double decay_prefactor(WeightFamily family, double alpha, Parity parity) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::domain_error("decay_prefactor: alpha must be in (0, 2)");
  const double C = riesz_constant(alpha);
  switch (family) {
    case WeightFamily::SP:
      if (alpha >= 1.0)
        throw std::domain_error(
            "decay_prefactor: SP decays like k^-2 with alternating signs for alpha >= 1");
      return C;
    case WeightFamily::PER:
    case WeightFamily::GL:
    case WeightFamily::T:
      return C;
    case WeightFamily::Q:
      if (parity == Parity::Even) return 4.0 / 3.0 * C;
      if (parity == Parity::Odd) return 2.0 / 3.0 * C;
      throw std::domain_error("decay_prefactor: Q requires a parity");
  }
  throw std::domain_error("decay_prefactor: unknown family");
}

bool is_nonnegative(const WeightSet& ws) {
  for (int k = 1; k <= ws.m; ++k)
    if (ws.w[static_cast<size_t>(k)] < 0.0) return false;
  return true;
}

WeightSet weights_from_symbol(const std::function<double(double)>& M,
                              double alpha, double h, int m,
                              WeightFamily label) {
  if (!(h > 0.0) || m < 1)
    throw std::domain_error("weights_from_symbol: bad h or m");
  WeightSet ws;
  ws.family = label;
  ws.alpha = alpha;
  ws.h = h;
  ws.m = m;
  ws.w.resize(static_cast<size_t>(m) + 1);
  const double pre = -std::pow(h, -alpha) / kPi;
  ws.w[0] = pre * integrate_graded_origin(M, kPi);
  for (int k = 1; k <= m; ++k) {
    auto f = [&](double xi) { return M(xi) * std::cos(k * xi); };
    double v = pre * integrate_oscillatory(f, kPi, (double)k);
    if (!std::isfinite(v))
      throw std::runtime_error("weights_from_symbol: quadrature failure");
    ws.w[static_cast<size_t>(k)] = v;
  }
  return ws;
}

void write_weights_csv(const WeightSet& ws, std::ostream& out) {
  out << "k,w_k\n";
  char buf[64];
  for (int k = 0; k <= ws.m; ++k) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", k, ws.w[static_cast<size_t>(k)]);
    out << buf;
  }
}

}  // namespace flap
