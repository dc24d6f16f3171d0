// Acceptance suite: one criterion per numbered block, one PASS/FAIL line
// each, non-zero exit count on failure. Run through ctest or directly;
// `acceptance_tests --only N` runs a single criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "flap/convergence.hpp"
#include "flap/dirichlet.hpp"
#include "flap/evolve.hpp"
#include "flap/operator.hpp"
#include "flap/oracle.hpp"
#include "flap/specfun.hpp"
#include "flap/symbol.hpp"
#include "flap/weights.hpp"

using namespace flap;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<double> dyadic_h() { return {0.25, 0.125, 0.0625, 0.03125, 0.015625}; }

// ---------------------------------------------------------------- 1
bool criterion_order_table() {
  Checker c;
  const std::vector<double> hs = dyadic_h();
  struct Row { WeightFamily fam; double expected(double a) const {
      switch (fam) {
        case WeightFamily::GL: return 1.0;
        case WeightFamily::PER: return 2.0;
        case WeightFamily::T: return 2.0 - a;
        default: return 3.0 - a;
      } } double tol() const { return fam == WeightFamily::Q ? 0.25 : 0.15; } };
  for (Row row : {Row{WeightFamily::GL}, Row{WeightFamily::PER},
                  Row{WeightFamily::T}, Row{WeightFamily::Q}}) {
    for (double a : {0.8, 1.5}) {
      ConvergenceReport rep = converge_gaussian_origin(row.fam, a, hs);
      const double want = row.expected(a);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s alpha=%.1f slope=%.3f (want %.2f+-%.2f)",
                    family_name(row.fam), a, rep.fitted_slope, want, row.tol());
      std::printf("    %s\n", buf);
      c.expect(std::abs(rep.fitted_slope - want) <= row.tol(), buf);
    }
  }
  for (double a : {0.2, 1.0, 1.5}) {
    GridField f = make_field(8.0, 0.125, [](double x) { return std::exp(-x * x); });
    WeightSet ws = make_weights(WeightFamily::SP, a, 0.125, 66);
    const long center = (f.size() - 1) / 2;
    const double err =
        std::abs(apply_direct(ws, f, center, center)[0] - flap_gaussian_origin(a));
    std::printf("    SP alpha=%.1f h=1/8 |err|=%.2e (want <= 1e-10)\n", a, err);
    c.expect(err <= 1e-10, "SP spectral accuracy");
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 2
bool criterion_cfl() {
  Checker c;
  const double h = 0.25;
  for (WeightFamily fam : {WeightFamily::SP, WeightFamily::PER, WeightFamily::GL,
                           WeightFamily::T, WeightFamily::Q}) {
    for (int i = 1; i <= 19; ++i) {
      const double a = 0.1 * i;
      if (fam == WeightFamily::SP && a >= 1.0) continue;
      WeightSet ws = make_weights(fam, a, h, 4);
      const double c1 = cfl_cmax(fam, a);
      const double c2 = -1.0 / (std::pow(h, a) * ws.w[0]);
      c.expect(std::abs(c1 - c2) <= 1e-8 * std::abs(c1),
               std::string(family_name(fam)) + " alpha=" + std::to_string(a));
    }
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 3
bool criterion_decay() {
  Checker c;
  const int m = 10001, k = 10000;
  for (double a : {0.8, 1.5}) {
    for (WeightFamily fam : {WeightFamily::PER, WeightFamily::GL, WeightFamily::T}) {
      WeightSet ws = make_weights(fam, a, 1.0, m);
      const double scaled = ws.w[k] * std::pow((double)k, 1.0 + a);
      const double want = decay_prefactor(fam, a);
      std::printf("    %s alpha=%.1f w_1e4 k^{1+a} = %.6f (prefactor %.6f)\n",
                  family_name(fam), a, scaled, want);
      c.expect(std::abs(scaled - want) <= 0.01 * want,
               std::string(family_name(fam)) + " decay");
    }
    WeightSet q = make_weights(WeightFamily::Q, a, 1.0, m);
    const double even = q.w[k] * std::pow((double)k, 1.0 + a);
    const double odd = q.w[k + 1] * std::pow((double)(k + 1), 1.0 + a);
    const double we = decay_prefactor(WeightFamily::Q, a, Parity::Even);
    const double wo = decay_prefactor(WeightFamily::Q, a, Parity::Odd);
    std::printf("    Q alpha=%.1f even %.6f (want %.6f), odd %.6f (want %.6f)\n",
                a, even, we, odd, wo);
    c.expect(std::abs(even - we) <= 0.01 * we, "Q even decay");
    c.expect(std::abs(odd - wo) <= 0.01 * wo, "Q odd decay");
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 4
bool criterion_alpha_to_2() {
  Checker c;
  const double a = 2.0 - 1e-6;
  for (WeightFamily fam : {WeightFamily::PER, WeightFamily::GL, WeightFamily::T,
                           WeightFamily::Q}) {
    WeightSet ws = make_weights(fam, a, 1.0, 12);
    c.expect(std::abs(ws.w[1] - 1.0) <= 1e-3,
             std::string(family_name(fam)) + " w_1 -> 1");
    for (int k = 2; k <= 10; ++k)
      c.expect(std::abs(ws.w[k]) <= 1e-3,
               std::string(family_name(fam)) + " w_" + std::to_string(k));
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 5
bool criterion_symbol() {
  Checker c;
  for (double a : {0.5, 1.5}) {
    WeightSet ws = make_weights(WeightFamily::GL, a, 1.0, 1 << 16);
    double worst = 0.0;
    for (int i = 1; i <= 512; ++i) {
      const double xi = (i - 0.5) * kPi / 512.0;
      worst = std::max(worst, std::abs(symbol_from_weights(ws, xi) -
                                       closed_symbol(WeightFamily::GL, a, xi)));
    }
    std::printf("    GL alpha=%.1f symbol sup-err = %.2e (want <= 1e-6)\n", a, worst);
    c.expect(worst <= 1e-6, "GL symbol uniform match");
  }
  for (double a : {0.5, 1.5}) {
    SymbolProbe p = accuracy_order_probe(WeightFamily::PER, a);
    const double want = -a / 24.0;
    std::printf("    PER alpha=%.1f coeff %.6f (want %.6f)\n", a, p.leading_coeff, want);
    c.expect(std::abs(p.leading_coeff - want) <= 0.02 * std::abs(want), "PER coeff");
  }
  for (double a : {0.25, 0.5, 0.75}) {
    SymbolProbe p = accuracy_order_probe(WeightFamily::GL, a);
    const double want = a / 2.0 * std::tan(a * kPi / 2.0);
    std::printf("    GL alpha=%.2f coeff %.6f (want %.6f)\n", a, p.leading_coeff, want);
    c.expect(std::abs(p.leading_coeff - want) <= 0.02 * std::abs(want), "GL coeff");
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 6
bool criterion_far_field() {
  Checker c;
  const double a = 0.4, beta = 0.6;
  const std::vector<double> hs = dyadic_h();
  std::vector<double> saturation;
  for (double L : {4.0, 8.0, 16.0}) {
    auto sweep = lorentzian_tail_sweep(WeightFamily::PER, a, beta, L, hs);
    std::printf("    L=%-4g corrected:", L);
    for (auto& p : sweep) std::printf(" %.2e", p.err_corrected);
    std::printf("  zero-ext: %.2e\n", sweep.back().err_zero_extension);
    // Every step before the curve enters the saturation band (1.5x the
    // final level) must decrease; a window this small may start saturated.
    const double band = 1.5 * sweep.back().err_corrected;
    for (size_t i = 0; i + 1 < sweep.size(); ++i) {
      if (sweep[i].err_corrected <= band) break;
      c.expect(sweep[i + 1].err_corrected < sweep[i].err_corrected,
               "corrected error decreases with h before saturating");
    }
    saturation.push_back(sweep.back().err_corrected);
    if (L == 16.0)
      c.expect(sweep.back().err_corrected * 10.0 <= sweep.back().err_zero_extension,
               "10x below zero extension at (L=16, h=1/64)");
  }
  c.expect(saturation[1] < saturation[0] && saturation[2] < saturation[1],
           "saturation level decreases with L");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 7
bool criterion_dirichlet() {
  Checker c;
  const double a = 1.5;
  const std::vector<double> hs = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};

  // The k + alpha/2 regularity cap binds only for families whose intrinsic
  // order exceeds it; the quadratic family is the one it applies to (its
  // smooth-data order at alpha = 1.5 measures 4 - alpha = 2.5 > 1.75).
  ConvergenceReport k1 = converge_dirichlet(1, WeightFamily::Q, a, hs);
  ConvergenceReport k1p = converge_dirichlet(1, WeightFamily::PER, a, hs);
  std::printf("    Q   k=1 slope %.3f (want 1.75+-0.2); PER k=1 slope %.3f "
              "(own order 2)\n", k1.fitted_slope, k1p.fitted_slope);
  c.expect(std::abs(k1.fitted_slope - 1.75) <= 0.2, "Q k=1");

  ConvergenceReport p3 = converge_dirichlet(3, WeightFamily::PER, a, hs);
  ConvergenceReport q3 = converge_dirichlet(3, WeightFamily::Q, a, hs);
  std::printf("    PER k=3 slope %.3f (want 2.0+-0.3, <= 3.95)\n", p3.fitted_slope);
  std::printf("    Q   k=3 slope %.3f (want 2.5+-0.3, <= 3.95)\n", q3.fitted_slope);
  c.expect(p3.fitted_slope <= 3.75 + 0.2, "k=3 slope cap");
  c.expect(q3.fitted_slope <= 3.75 + 0.2, "k=3 slope cap");
  c.expect(std::abs(p3.fitted_slope - 2.0) <= 0.3, "PER k=3 near min(2, 3.75)");
  // Q's order at alpha in (1,2) is 4 - alpha = 2.5, so min(order, k+a/2) = 2.5.
  c.expect(std::abs(q3.fitted_slope - 2.5) <= 0.3, "Q k=3 near min(2.5, 3.75)");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 8
bool criterion_supersolution() {
  Checker c;
  const double h = 1.0 / 32;
  for (WeightFamily fam : {WeightFamily::PER, WeightFamily::GL, WeightFamily::T,
                           WeightFamily::Q}) {
    std::printf("    %-3s:", family_name(fam));
    for (int i = 1; i <= 7; ++i) {
      const double a = 0.25 * i;
      SupersolutionVerdict v = check_supersolution_vG(fam, a, h);
      std::printf(" %.4f%s", v.min_value, v.ok ? "" : "!");
      c.expect(v.ok, std::string(family_name(fam)) + " alpha=" + std::to_string(a));
    }
    std::printf("\n");
  }
  std::printf("    SP :");
  for (double a : {0.25, 0.5, 0.75}) {
    SupersolutionVerdict v = check_supersolution_vG(WeightFamily::SP, a, h);
    std::printf(" %.4f%s", v.min_value, v.ok ? "" : "!");
    c.expect(v.ok, "SP alpha=" + std::to_string(a));
  }
  std::printf("\n");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 9
bool criterion_identities() {
  Checker c;
  const double h = 0.1;
  const long K = 32;
  const double alphas[] = {0.3, 0.7, 1.1, 1.5, 1.9};
  int n_sa = 0, n_par = 0, n_en = 0, n_cord = 0, n_sv = 0;
  for (int seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(static_cast<unsigned long>(seed));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double a = alphas[seed % 5];
    WeightSet ws = make_weights(WeightFamily::PER, a, h, 2 * K);
    std::vector<double> uv(2 * K + 1), vv(2 * K + 1);
    for (auto& x : uv) x = unif(rng);
    for (auto& x : vv) x = unif(rng);
    GridField u(h, -K, uv), v(h, -K, vv);

    GridField lu = u, lv = v;
    lu.u = apply_direct(ws, u);
    lv.u = apply_direct(ws, v);
    const double ip_lu_v = inner_product(lu, v);
    if (std::abs(ip_lu_v - inner_product(u, lv)) <=
        1e-11 * (1.0 + std::abs(ip_lu_v)))
      ++n_sa;

    const int P = 4096;
    double integral = 0.0;
    for (int i = 0; i < P; ++i) {
      const double xi = -kPi / h + 2.0 * kPi / h * i / P;
      integral += std::norm(sdft(u, xi));
    }
    integral *= 2.0 * kPi / h / P;
    if (std::abs(inner_product(u, u) - integral / (2.0 * kPi)) <=
        1e-8 * inner_product(u, u))
      ++n_par;

    const double e = energy(ws, u);
    if (e >= 0.0 &&
        std::abs(e - 0.5 * inner_product(lu, u)) <= 1e-10 * (1.0 + e))
      ++n_en;

    bool cord = true;
    for (int p : {2, 3, 4}) {
      GridField up = u;
      for (auto& val : up.u) val = std::pow(std::abs(val), p);
      const std::vector<double> lup = apply_direct(ws, up);
      for (long i = 0; i < u.size(); ++i) {
        const double ui = u.u[static_cast<size_t>(i)];
        if (std::pow(std::abs(ui), p - 2) * ui * lu.u[static_cast<size_t>(i)] <
            lup[static_cast<size_t>(i)] / p - 1e-12)
          cord = false;
      }
    }
    if (cord) ++n_cord;

    bool sv = true;
    for (int p : {3, 4, 6}) {
      GridField upm = u, uh = u;
      for (long i = 0; i < u.size(); ++i) {
        const double ui = u.u[static_cast<size_t>(i)];
        upm.u[static_cast<size_t>(i)] = std::pow(std::abs(ui), p - 2) * ui;
        uh.u[static_cast<size_t>(i)] = std::pow(std::abs(ui), p / 2.0);
      }
      GridField luh = uh;
      luh.u = apply_direct(ws, uh);
      if (inner_product(upm, lu) < 2.0 / p * inner_product(uh, luh) - 1e-12)
        sv = false;
    }
    if (sv) ++n_sv;
  }
  std::printf(
      "    self-adjoint %d/100, Parseval %d/100, energy %d/100, Cordoba "
      "%d/100, Stroock-Varopoulos %d/100\n",
      n_sa, n_par, n_en, n_cord, n_sv);
  c.expect(n_sa == 100 && n_par == 100 && n_en == 100 && n_cord == 100 &&
               n_sv == 100,
           "identity suite");
  return c.ok;
}

// ---------------------------------------------------------------- 10
bool criterion_heat() {
  Checker c;
  const double h = 0.1, L = 10.0;
  const long nl = std::lround(L / h);
  for (auto [a, dt] : {std::pair{0.5, 0.01}, std::pair{1.5, 0.0032}}) {
    const long M = std::lround(3.0 * L / h);
    WeightSet ws = make_weights(WeightFamily::PER, a, h, static_cast<int>(M + nl));
    GridField u = make_field(L, h, [](double x) {
      return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
    });
    ExteriorPolicy ext;
    ext.kind = ExteriorPolicy::Kind::Tail;
    ext.c_left = -1.0;
    ext.c_right = 1.0;
    ext.beta = a;
    double t = 0.0;
    double worst_mass = 0.0;
    while (t < 0.5 - 1e-12) {
      const double step = std::min(dt, 0.5 - t);
      u = step_heat(ws, u, step, ext);
      t += step;
      double m = 0.0;
      for (long i = 0; i < u.size(); ++i)
        m += u.u[static_cast<size_t>(i)] -
             (u.x(i) > 0 ? 1.0 : (u.x(i) < 0 ? -1.0 : 0.0));
      worst_mass = std::max(worst_mass, std::abs(m * h));
    }
    double sup = 0.0;
    for (long i = 0; i < u.size(); ++i)
      sup = std::max(sup, std::abs(u.u[static_cast<size_t>(i)] -
                                   heat_green_sign(a, 0.5, u.x(i))));
    std::printf("    sign run alpha=%.1f dt=%g sup-err=%.4f (<= 0.05), "
                "baseline-mass drift %.1e\n", a, dt, sup, worst_mass);
    c.expect(sup <= 5e-2, "heat profile vs Green oracle");
    c.expect(worst_mass <= 1e-10, "odd-symmetry mass");
  }
  {
    WeightSet ws = make_weights(WeightFamily::PER, 0.5, h, 40);
    GridField u = make_field(20.0, h, [](double x) { return std::exp(-x * x); });
    double m0 = h * std::accumulate(u.u.begin(), u.u.end(), 0.0);
    bool nonneg = true;
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      u = step_heat(ws, u, 0.01, ExteriorPolicy{});
      for (double v : u.u) nonneg = nonneg && v >= 0.0;
      const double m1 = h * std::accumulate(u.u.begin(), u.u.end(), 0.0);
      worst = std::max(worst, std::abs(m1 - m0) / m0);
      m0 = m1;
    }
    std::printf("    bump run: nonneg %s, worst per-step mass drift %.1e\n",
                nonneg ? "yes" : "NO", worst);
    c.expect(nonneg, "nonnegativity per step");
    c.expect(worst <= 1e-10, "mass per step");
  }
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 11
bool criterion_burgers() {
  Checker c;
  const double h = 0.1, L = 10.0;
  {
    GridField u0 = make_field(L, h, [](double x) {
      return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
    });
    EvolutionConfig cfg;
    cfg.kind = PdeKind::Burgers;
    cfg.ws = make_weights(WeightFamily::PER, 1.0, h, 8);
    cfg.kappa = 0.0;
    cfg.dt = 0.05;
    cfg.t_final = 2.0;
    cfg.exterior.kind = ExteriorPolicy::Kind::Constant;
    cfg.exterior.c_left = -1.0;
    cfg.exterior.c_right = 1.0;
    EvolutionTrace tr = run(cfg, u0, {2.0});
    const GridField& u = tr.fields.back();
    double err = 0.0, lo = 1e9, hi = -1e9;
    for (long i = 0; i < u.size(); ++i) {
      const double x = u.x(i);
      lo = std::min(lo, u.u[static_cast<size_t>(i)]);
      hi = std::max(hi, u.u[static_cast<size_t>(i)]);
      if (std::abs(x - 2.0) < 0.5 || std::abs(x + 2.0) < 0.5) continue;
      err = std::max(err, std::abs(u.u[static_cast<size_t>(i)] -
                                   std::clamp(x / 2.0, -1.0, 1.0)));
    }
    std::printf("    rarefaction sup-err %.4f (<= %.2f); range [%.3f, %.3f]\n",
                err, 3.0 * h, lo, hi);
    c.expect(err <= 3.0 * h, "rarefaction");
    c.expect(lo >= -1.0 - 1e-12 && hi <= 1.0 + 1e-12, "maximum principle");
  }
  auto steepness = [&](double a, double kappa, double hh) {
    const long nl = std::lround(L / hh);
    const long M = std::lround(3.0 * L / hh);
    EvolutionConfig cfg;
    cfg.kind = PdeKind::Burgers;
    cfg.ws = make_weights(WeightFamily::PER, a, hh, static_cast<int>(M + nl));
    cfg.kappa = kappa;
    cfg.dt = 0.8 * std::min(hh, 1.0 / (kappa * (-cfg.ws.w[0])));
    cfg.t_final = 4.0;
    cfg.exterior.kind = ExteriorPolicy::Kind::Tail;
    cfg.exterior.c_left = 1.0;
    cfg.exterior.c_right = -1.0;
    cfg.exterior.beta = a;
    GridField u0 = make_field(L, hh, [](double x) {
      return x > 0 ? -1.0 : (x < 0 ? 1.0 : 0.0);
    });
    EvolutionTrace tr = run(cfg, u0, {4.0});
    const GridField& u = tr.fields.back();
    double s = 0.0, lo = 1e9, hi = -1e9;
    for (long i = 0; i + 1 < u.size(); ++i) {
      s = std::max(s, std::abs(u.u[static_cast<size_t>(i + 1)] -
                               u.u[static_cast<size_t>(i)]) / hh);
      lo = std::min(lo, u.u[static_cast<size_t>(i)]);
      hi = std::max(hi, u.u[static_cast<size_t>(i)]);
    }
    c.expect(lo >= -1.0 - 1e-12 && hi <= 1.0 + 1e-12, "maximum principle (steady run)");
    return s;
  };
  const double sA1 = steepness(1.2, 1.0, 0.1), sA2 = steepness(1.2, 1.0, 0.05);
  const double sB1 = steepness(0.4, 0.1, 0.1), sB2 = steepness(0.4, 0.1, 0.05);
  std::printf("    steepness alpha=1.2/k=1: %.3f -> %.3f (ratio %.2f, want <= 1.4)\n",
              sA1, sA2, sA2 / sA1);
  std::printf("    steepness alpha=0.4/k=0.1: %.3f -> %.3f (ratio %.2f, want >= 1.6)\n",
              sB1, sB2, sB2 / sB1);
  c.expect(sA2 / sA1 <= 1.4, "smooth profile stays resolved");
  c.expect(sB2 / sB1 >= 1.6, "steep profile sharpens like 1/h");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 12
bool criterion_thinfilm() {
  Checker c;
  const double a = 0.5, h = 0.01, L = 4.0;
  const long nl = std::lround(L / h);
  EvolutionConfig cfg;
  cfg.kind = PdeKind::ThinFilm;
  cfg.ws = make_weights(WeightFamily::PER, a, h, static_cast<int>(2 * nl));
  cfg.dt = 1e-4;
  cfg.t_final = 0.4;
  const double M = std::sqrt(kPi) * flap::gamma(2.0 + a / 2.0) /
                   flap::gamma((5.0 + a) / 2.0);
  GridField u0 = make_field(L, h, [&](double x) {
    return M / std::sqrt(kPi) *
           (0.8 * std::exp(-4.0 * (x - 1.0) * (x - 1.0)) +
            1.6 * std::exp(-16.0 * (x + 2.0) * (x + 2.0)));
  });
  double mass0 = h * std::accumulate(u0.u.begin(), u0.u.end(), 0.0);
  for (auto& v : u0.u) v *= M / mass0;

  EvolutionTrace tr = run(cfg, u0, {0.05, 0.1, 0.2, 0.4});
  double drift = 0.0;
  for (double m : tr.masses) drift = std::max(drift, std::abs(m - M) / M);
  std::printf("    mass drift over run: %.2e (<= 1e-10)\n", drift);
  c.expect(drift <= 1e-10, "mass conservation");

  auto dist = [&](const GridField& f) {
    double d = 0.0;
    for (long i = 0; i < f.size(); ++i) {
      const double s = 1.0 - f.x(i) * f.x(i);
      const double steady = s > 0.0 ? std::pow(s, 1.0 + a / 2.0) : 0.0;
      d = std::max(d, std::abs(f.u[static_cast<size_t>(i)] - steady));
    }
    return d;
  };
  std::printf("    ||u - u_inf||:");
  std::vector<double> ds;
  for (size_t s = 0; s < tr.times.size(); ++s) {
    ds.push_back(dist(tr.fields[s]));
    std::printf(" t=%.2f: %.4f", tr.times[s], ds.back());
  }
  std::printf("\n");
  for (size_t i = 1; i < ds.size(); ++i)
    c.expect(ds[i] < ds[i - 1], "monotone approach to the steady state");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

// ---------------------------------------------------------------- 13
bool criterion_fast_path() {
  Checker c;
  double worst = 0.0;
  for (int seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(static_cast<unsigned long>(seed));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    WeightSet ws = make_weights(WeightFamily::PER, 1.3, 1.0, 512);
    std::vector<double> uv(512);
    for (auto& x : uv) x = unif(rng);
    GridField f(1.0, -256, uv);
    const std::vector<double> a = apply_direct(ws, f);
    const std::vector<double> b = apply_fast(ws, f);
    for (size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  std::printf("    max |fast - direct| over 50 fields: %.2e (<= 1e-11)\n", worst);
  c.expect(worst <= 1e-11, "fast equals direct");

  const int N = 1 << 14;
  WeightSet ws = make_weights(WeightFamily::PER, 1.3, 1.0, N);
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> uv(static_cast<size_t>(N));
  for (auto& x : uv) x = unif(rng);
  GridField f(1.0, -N / 2, uv);
  const auto t0 = std::chrono::steady_clock::now();
  volatile double sink = apply_direct(ws, f)[0];
  const auto t1 = std::chrono::steady_clock::now();
  sink = sink + apply_fast(ws, f)[0];
  const auto t2 = std::chrono::steady_clock::now();
  (void)sink;
  const double td = std::chrono::duration<double>(t1 - t0).count();
  const double tf = std::chrono::duration<double>(t2 - t1).count();
  std::printf("    N = m = 2^14: direct %.3fs, fast %.4fs, speedup %.1fx (>= 5)\n",
              td, tf, td / tf);
  c.expect(td / tf >= 5.0, "speedup");
  if (!c.ok) std::printf("    failed: %s\n", c.detail.c_str());
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);

  struct Entry {
    int id;
    const char* label;
    bool (*fn)();
  };
  const Entry entries[] = {
      {1, "order-of-accuracy table (Gaussian at origin + SP spectral)", criterion_order_table},
      {2, "CFL closed forms vs generated w_0", criterion_cfl},
      {3, "large-k decay prefactors", criterion_decay},
      {4, "alpha -> 2 three-point limit", criterion_alpha_to_2},
      {5, "symbol identities and leading coefficients", criterion_symbol},
      {6, "far-field tail correction", criterion_far_field},
      {7, "Dirichlet convergence", criterion_dirichlet},
      {8, "supersolution sweep", criterion_supersolution},
      {9, "identity/inequality suite", criterion_identities},
      {10, "fractional heat vs Green oracle", criterion_heat},
      {11, "fractal Burgers", criterion_burgers},
      {12, "thin film mass and steady state", criterion_thinfilm},
      {13, "fast convolution path", criterion_fast_path},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    if (only != 0 && e.id != only) continue;
    std::printf("criterion %d: %s\n", e.id, e.label);
    bool ok = false;
    try {
      ok = e.fn();
    } catch (const std::exception& ex) {
      std::printf("    exception: %s\n", ex.what());
    }
    std::printf("criterion %d [%s] %s\n", e.id, ok ? "PASS" : "FAIL", e.label);
    if (!ok) ++failures;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
