#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "flap/convergence.hpp"
#include "flap/dirichlet.hpp"
#include "flap/evolve.hpp"
#include "flap/operator.hpp"
#include "flap/oracle.hpp"
#include "flap/specfun.hpp"
#include "flap/symbol.hpp"
#include "flap/weights.hpp"

namespace {

using namespace flap;

constexpr double kPi = 3.14159265358979323846;

struct OutStream {
  std::ofstream file;
  std::ostream& get(const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_h_list(const std::string& s) {
  std::vector<double> hs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    // accept both decimals and fractions like 1/64
    const auto slash = item.find('/');
    if (slash == std::string::npos) {
      hs.push_back(std::stod(item));
    } else {
      hs.push_back(std::stod(item.substr(0, slash)) /
                   std::stod(item.substr(slash + 1)));
    }
  }
  if (hs.empty()) throw std::invalid_argument("empty h list");
  return hs;
}

int run_weights(const std::string& family, double alpha, double h, int m,
                const std::string& out) {
  WeightSet ws = make_weights(family_from_name(family), alpha, h, m);
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=weights family=" << family << " alpha=" << alpha << " h=" << h
    << " m=" << m << "\n";
  write_weights_csv(ws, o);
  return 0;
}

int run_symbol(const std::string& family, double alpha, int m, int points,
               const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  WeightSet ws = make_weights(fam, alpha, 1.0, m);
  const bool has_closed = (fam == WeightFamily::SP || fam == WeightFamily::PER ||
                           (fam == WeightFamily::GL && alpha != 1.0));
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=symbol family=" << family << " alpha=" << alpha << " m=" << m
    << " points=" << points << "\n";
  o << "xi,M_weights,M_closed,abs_err\n";
  for (int i = 0; i <= points; ++i) {
    const double xi = kPi * i / points;
    const double mw = symbol_from_weights(ws, xi);
    if (has_closed) {
      const double mc = closed_symbol(fam, alpha, xi);
      o << fmt(xi) << ',' << fmt(mw) << ',' << fmt(mc) << ','
        << fmt(std::abs(mw - mc)) << "\n";
    } else {
      o << fmt(xi) << ',' << fmt(mw) << ",nan,nan\n";
    }
  }
  return 0;
}

int run_apply(const std::string& family, double alpha, double h, double L,
              const std::string& oracle, double beta, double LM,
              const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  std::function<double(double)> fn;
  std::function<double(double)> exact;  // may be empty
  int bump_k = 0;
  if (oracle == "gaussian0") {
    fn = [](double x) { return std::exp(-x * x); };
    const double at0 = flap_gaussian_origin(alpha);
    exact = [at0](double x) {
      return x == 0.0 ? at0 : std::numeric_limits<double>::quiet_NaN();
    };
  } else if (oracle == "lorentzian") {
    fn = [alpha](double x) { return std::pow(1.0 + x * x, -(1.0 - alpha) / 2.0); };
    exact = [alpha](double x) { return flap_lorentzian(alpha, x); };
  } else if (oracle.rfind("beta_bump:", 0) == 0) {
    bump_k = std::stoi(oracle.substr(10));
    fn = [bump_k, alpha](double x) {
      const double s = 1.0 - x * x;
      return s > 0.0 ? std::pow(s, bump_k + alpha / 2.0) : 0.0;
    };
    exact = [bump_k, alpha](double x) {
      const double ax = std::abs(x);
      if (ax >= 1.0 && ax * ax * 0.9 < 1.0)
        return std::numeric_limits<double>::quiet_NaN();
      return flap_beta_bump(bump_k, alpha, x);
    };
  } else {
    throw std::invalid_argument("unknown oracle: " + oracle);
  }

  GridField f = make_field(L, h, fn);
  const long nl = std::lround(L / h);
  std::vector<double> lu;
  WeightSet ws;
  if (beta > 0.0) {
    const double lmv = LM > 0.0 ? LM : 3.0 * L;
    const long M = std::lround(lmv / h);
    ws = make_weights(fam, alpha, h, static_cast<int>(M + nl));
    TailSpec tail = tail_from_field(f, beta, lmv);
    lu = apply_truncated(ws, f, tail);
  } else {
    ws = make_weights(fam, alpha, h, static_cast<int>(2 * nl));
    lu = apply_direct(ws, f);
  }

  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=apply family=" << family << " alpha=" << alpha << " h=" << h
    << " L=" << L << " oracle=" << oracle << " beta=" << beta << " LM=" << LM
    << "\n";
  o << "x,u,flap_u,flap_exact,abs_err\n";
  for (long i = 0; i < f.size(); ++i) {
    const double x = f.x(i);
    const double ex = exact(x);
    o << fmt(x) << ',' << fmt(f.u[static_cast<size_t>(i)]) << ','
      << fmt(lu[static_cast<size_t>(i)]) << ',' << fmt(ex) << ','
      << fmt(std::abs(lu[static_cast<size_t>(i)] - ex)) << "\n";
  }
  return 0;
}

int run_dirichlet(const std::string& family, double alpha, double h, int k,
                  bool f_one, const std::string& out) {
  DirichletProblem p;
  const long nh = std::lround(1.0 / h);
  p.ws = make_weights(family_from_name(family), alpha, h,
                      static_cast<int>(2 * nh + 2));
  if (f_one) {
    p.f = [](double) { return 1.0; };
  } else {
    p.f = [k, alpha](double x) {
      return beta_bump_constant(k, alpha) *
             gauss_2f1((1.0 + alpha) / 2.0, -k, 0.5, x * x);
    };
  }
  GridField u = solve(p);
  const double K = exit_time_constant(alpha);
  auto exact = [&](double x) {
    const double s = 1.0 - x * x;
    if (s <= 0.0) return 0.0;
    return f_one ? K * std::pow(s, alpha / 2.0) : std::pow(s, k + alpha / 2.0);
  };

  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=dirichlet family=" << family << " alpha=" << alpha << " h=" << h
    << (f_one ? " f=1" : " k=" + std::to_string(k)) << "\n";
  o << "x,u_h,u_exact,abs_err\n";
  double sup = 0.0;
  for (long i = 0; i < u.size(); ++i) {
    const double x = u.x(i);
    const double e = std::abs(u.u[static_cast<size_t>(i)] - exact(x));
    sup = std::max(sup, e);
    o << fmt(x) << ',' << fmt(u.u[static_cast<size_t>(i)]) << ','
      << fmt(exact(x)) << ',' << fmt(e) << "\n";
  }
  o << "# h,sup_error\n# " << fmt(h) << ',' << fmt(sup) << "\n";
  return 0;
}

int run_converge(const std::string& target, const std::string& family,
                 double alpha, const std::string& h_list, double L, double beta,
                 const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  const std::vector<double> hs = parse_h_list(h_list);
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=converge target=" << target << " family=" << family
    << " alpha=" << alpha << " h=" << h_list << " L=" << L << " beta=" << beta
    << "\n";

  if (target == "lorentzian-tail") {
    const double b = beta > 0.0 ? beta : 1.0 - alpha;
    auto sweep = lorentzian_tail_sweep(fam, alpha, b, L, hs);
    o << "h,sup_error_corrected,sup_error_zero_extension\n";
    for (const auto& p : sweep)
      o << fmt(p.h) << ',' << fmt(p.err_corrected) << ','
        << fmt(p.err_zero_extension) << "\n";
    return 0;
  }

  ConvergenceReport rep;
  if (target == "gaussian0") {
    rep = converge_gaussian_origin(fam, alpha, hs);
  } else if (target.rfind("beta_bump:", 0) == 0) {
    rep = converge_beta_bump_origin(std::stoi(target.substr(10)), fam, alpha, hs);
  } else if (target.rfind("dirichlet:", 0) == 0) {
    rep = converge_dirichlet(std::stoi(target.substr(10)), fam, alpha, hs);
  } else {
    throw std::invalid_argument("unknown converge target: " + target);
  }
  o << "h,sup_error\n";
  for (const auto& p : rep.points) o << fmt(p.h) << ',' << fmt(p.err) << "\n";
  o << "# fitted_slope=" << fmt(rep.fitted_slope) << " fit_points=["
    << rep.fit_begin << ',' << rep.fit_end << ")\n";
  std::cerr << "fitted slope: " << rep.fitted_slope << "\n";
  return 0;
}

void write_snapshots(std::ostream& o, const EvolutionTrace& tr) {
  o << "t,x,u\n";
  for (size_t s = 0; s < tr.times.size(); ++s) {
    const GridField& f = tr.fields[s];
    for (long i = 0; i < f.size(); ++i)
      o << fmt(tr.times[s]) << ',' << fmt(f.x(i)) << ','
        << fmt(f.u[static_cast<size_t>(i)]) << "\n";
  }
}

std::vector<double> parse_times(const std::string& s) {
  std::vector<double> ts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ts.push_back(std::stod(item));
  return ts;
}

int run_heat(const std::string& family, double alpha, double h, double L,
             double dt, double tfinal, const std::string& init,
             const std::string& snapshots, double beta, double LM_factor,
             const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  EvolutionConfig cfg;
  cfg.kind = PdeKind::Heat;
  cfg.dt = dt;
  cfg.t_final = tfinal;

  GridField u0(1.0, 0, {0.0});
  const long nl = std::lround(L / h);
  if (init == "sign") {
    u0 = make_field(L, h, [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); });
    cfg.exterior.kind = ExteriorPolicy::Kind::Tail;
    cfg.exterior.c_left = -1.0;
    cfg.exterior.c_right = 1.0;
    cfg.exterior.beta = beta > 0.0 ? beta : alpha;
    cfg.exterior.L_M_factor = LM_factor;
    const long M = std::lround(LM_factor * L / h);
    cfg.ws = make_weights(fam, alpha, h, static_cast<int>(M + nl));
  } else if (init == "gaussian") {
    u0 = make_field(L, h, [](double x) { return std::exp(-x * x); });
    cfg.ws = make_weights(fam, alpha, h, static_cast<int>(2 * nl));
  } else {
    throw std::invalid_argument("unknown init: " + init);
  }

  EvolutionTrace tr = run(cfg, u0, snapshots.empty()
                                       ? std::vector<double>{tfinal}
                                       : parse_times(snapshots));
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=heat family=" << family << " alpha=" << alpha << " h=" << h
    << " L=" << L << " dt=" << dt << " tfinal=" << tfinal << " init=" << init
    << " beta=" << cfg.exterior.beta << " LM_factor=" << LM_factor << "\n";
  write_snapshots(o, tr);
  return 0;
}

int run_burgers(const std::string& family, double alpha, double h, double L,
                double dt, double tfinal, double kappa, const std::string& flux,
                const std::string& init, const std::string& snapshots,
                const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  EvolutionConfig cfg;
  cfg.kind = PdeKind::Burgers;
  cfg.dt = dt;
  cfg.t_final = tfinal;
  cfg.kappa = kappa;
  cfg.flux = (flux == "lax-friedrichs") ? FluxKind::LaxFriedrichs : FluxKind::Godunov;

  const long nl = std::lround(L / h);
  GridField u0(1.0, 0, {0.0});
  if (init == "sign" || init == "msign") {
    const double s = (init == "sign") ? 1.0 : -1.0;
    u0 = make_field(L, h, [s](double x) { return x > 0 ? s : (x < 0 ? -s : 0.0); });
    cfg.exterior.kind = ExteriorPolicy::Kind::Tail;
    cfg.exterior.c_left = -s;
    cfg.exterior.c_right = s;
    cfg.exterior.beta = alpha;
    const long M = std::lround(3.0 * L / h);
    cfg.ws = make_weights(fam, alpha, h, static_cast<int>(M + nl));
  } else if (init == "cosbump") {
    u0 = make_field(L, h, [](double x) {
      return std::abs(x) <= kPi / 2.0 ? std::cos(x) : 0.0;
    });
    cfg.ws = make_weights(fam, alpha, h, static_cast<int>(2 * nl));
  } else {
    throw std::invalid_argument("unknown init: " + init);
  }

  EvolutionTrace tr = run(cfg, u0, snapshots.empty()
                                       ? std::vector<double>{tfinal}
                                       : parse_times(snapshots));
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=burgers family=" << family << " alpha=" << alpha << " h=" << h
    << " L=" << L << " dt=" << dt << " tfinal=" << tfinal << " kappa=" << kappa
    << " flux=" << flux << " init=" << init << "\n";
  write_snapshots(o, tr);
  return 0;
}

int run_thinfilm(const std::string& family, double alpha, double h, double L,
                 double dt, double tfinal, double lambda,
                 const std::string& snapshots, const std::string& out) {
  const WeightFamily fam = family_from_name(family);
  EvolutionConfig cfg;
  cfg.kind = PdeKind::ThinFilm;
  cfg.dt = dt;
  cfg.t_final = tfinal;
  cfg.lambda = lambda;

  const long nl = std::lround(L / h);
  cfg.ws = make_weights(fam, alpha, h, static_cast<int>(2 * nl));

  // Two-Gaussian profile, rescaled so the discrete mass matches the steady
  // state's mass M = sqrt(pi) Gamma(2 + a/2) / Gamma((5 + a)/2).
  const double M = std::sqrt(kPi) * flap::gamma(2.0 + alpha / 2.0) /
                   flap::gamma((5.0 + alpha) / 2.0);
  GridField u0 = make_field(L, h, [&](double x) {
    return M / std::sqrt(kPi) *
           (0.8 * std::exp(-4.0 * (x - 1.0) * (x - 1.0)) +
            1.6 * std::exp(-16.0 * (x + 2.0) * (x + 2.0)));
  });
  double mass0 = 0.0;
  for (double v : u0.u) mass0 += v * h;
  for (auto& v : u0.u) v *= M / mass0;

  EvolutionTrace tr = run(cfg, u0, snapshots.empty()
                                       ? std::vector<double>{tfinal}
                                       : parse_times(snapshots));
  OutStream os;
  auto& o = os.get(out);
  o << "# cmd=thinfilm family=" << family << " alpha=" << alpha << " h=" << h
    << " L=" << L << " dt=" << dt << " tfinal=" << tfinal
    << " lambda=" << (lambda == 0.0 ? thinfilm_steady_lambda(alpha) : lambda)
    << " mass=" << M << "\n";
  write_snapshots(o, tr);
  return 0;
}

int run_selftest(unsigned long seed) {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double h = 0.1;
  WeightSet ws = make_weights(WeightFamily::PER, 1.3, h, 64);
  std::vector<double> uv(65), vv(65);
  for (auto& x : uv) x = unif(rng);
  for (auto& x : vv) x = unif(rng);
  GridField u(h, -32, uv), v(h, -32, vv);

  GridField lu = u, lv = v;
  lu.u = apply_direct(ws, u);
  lv.u = apply_direct(ws, v);
  report("self-adjointness", std::abs(inner_product(lu, v) - inner_product(u, lv)) <
                                 1e-11 * (1.0 + std::abs(inner_product(lu, v))));
  report("energy-equivalence",
         std::abs(energy(ws, u) - 0.5 * inner_product(lu, u)) <
             1e-10 * (1.0 + energy(ws, u)));
  report("energy-nonnegative", energy(ws, u) >= 0.0);

  const std::vector<double> fast = apply_fast(ws, u);
  double dmax = 0.0;
  for (size_t i = 0; i < fast.size(); ++i)
    dmax = std::max(dmax, std::abs(fast[i] - lu.u[i]));
  report("fast-equals-direct", dmax <= 1e-11);

  bool cfl_ok = true;
  for (int i = 1; i <= 19; ++i) {
    const double a = 0.1 * i;
    for (WeightFamily fam : {WeightFamily::PER, WeightFamily::GL, WeightFamily::T,
                             WeightFamily::Q}) {
      WeightSet w = make_weights(fam, a, 0.5, 4);
      const double c1 = cfl_cmax(fam, a);
      const double c2 = -1.0 / (std::pow(0.5, a) * w.w[0]);
      if (std::abs(c1 - c2) > 1e-8 * c1) cfl_ok = false;
    }
  }
  report("cfl-closed-forms", cfl_ok);

  SupersolutionVerdict sv = check_supersolution_vG(WeightFamily::PER, 0.75, 1.0 / 16);
  report("supersolution-vG", sv.ok);

  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference fractional Laplacian toolkit (1D)"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string family = "PER", out, oracle = "gaussian0", target = "gaussian0";
  std::string h_list = "0.25,0.125,0.0625", init = "sign", flux = "godunov";
  std::string snapshots;
  double alpha = 1.0, h = 0.1, L = 8.0, beta = 0.0, LM = 0.0, LM_factor = 3.0;
  double dt = 0.01, tfinal = 0.5, kappa = 1.0, lambda = 0.0;
  int m = 64, points = 512, bump_k = 1;
  bool f_one = false;
  unsigned long seed = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--family", family, "weight family: SP|PER|GL|T|Q");
    c->add_option("--alpha", alpha, "fractional order in (0,2)");
    c->add_option("--out", out, "output CSV path (default stdout)");
  };
  // the grid-spacing flag --h needs the short help flag out of the way
  auto add_sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print help");
    return s;
  };

  auto* w = add_sub("weights", "emit a weight table");
  add_common(w);
  w->add_option("--h", h);
  w->add_option("--m", m);

  auto* sy = app.add_subcommand("symbol", "emit the rescaled symbol");
  add_common(sy);
  sy->add_option("--m", m);
  sy->add_option("--points", points);

  auto* ap = app.add_subcommand("apply", "apply the operator to a named test function");
  add_common(ap);
  ap->add_option("--h", h);
  ap->add_option("--L", L);
  ap->add_option("--oracle", oracle, "gaussian0|lorentzian|beta_bump:k");
  ap->add_option("--beta", beta, "tail decay; > 0 enables the far-field closure");
  ap->add_option("--LM", LM, "extension radius (default 3L)");

  auto* di = app.add_subcommand("dirichlet", "solve the extended Dirichlet problem");
  add_common(di);
  di->add_option("--h", h);
  di->add_option("--k", bump_k, "bump index of the manufactured right-hand side");
  di->add_flag("--f-one", f_one, "use f = 1 (exit-time problem)");

  auto* cv = app.add_subcommand("converge", "grid-refinement sweep with slope fit");
  add_common(cv);
  cv->add_option("--target", target,
                 "gaussian0|beta_bump:k|dirichlet:k|lorentzian-tail");
  cv->add_option("--h-list", h_list, "comma-separated h values (fractions ok)");
  cv->add_option("--L", L);
  cv->add_option("--beta", beta);

  auto* he = app.add_subcommand("heat", "fractional heat equation");
  add_common(he);
  he->add_option("--h", h);
  he->add_option("--L", L);
  he->add_option("--dt", dt);
  he->add_option("--tfinal", tfinal);
  he->add_option("--init", init, "sign|gaussian");
  he->add_option("--snapshots", snapshots, "comma-separated times");
  he->add_option("--beta", beta);
  he->add_option("--LM-factor", LM_factor);

  auto* bu = app.add_subcommand("burgers", "fractal Burgers equation");
  add_common(bu);
  bu->add_option("--h", h);
  bu->add_option("--L", L);
  bu->add_option("--dt", dt);
  bu->add_option("--tfinal", tfinal);
  bu->add_option("--kappa", kappa);
  bu->add_option("--flux", flux, "godunov|lax-friedrichs");
  bu->add_option("--init", init, "sign|msign|cosbump");
  bu->add_option("--snapshots", snapshots);

  auto* tf = app.add_subcommand("thinfilm", "fractional thin film in similarity variables");
  add_common(tf);
  tf->add_option("--h", h);
  tf->add_option("--L", L);
  tf->add_option("--dt", dt);
  tf->add_option("--tfinal", tfinal);
  tf->add_option("--lambda", lambda, "drift (0 selects the steady-state value)");
  tf->add_option("--snapshots", snapshots);

  auto* st = app.add_subcommand("selftest", "quick invariant battery");
  st->add_option("--seed", seed);

  // the grid-spacing flag --h needs the short help flag out of the way
  for (CLI::App* sub : {w, sy, ap, di, cv, he, bu, tf, st})
    sub->set_help_flag("--help", "print help");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (w->parsed()) return run_weights(family, alpha, h, m, out);
    if (sy->parsed()) return run_symbol(family, alpha, m, points, out);
    if (ap->parsed()) return run_apply(family, alpha, h, L, oracle, beta, LM, out);
    if (di->parsed()) return run_dirichlet(family, alpha, h, bump_k, f_one, out);
    if (cv->parsed())
      return run_converge(target, family, alpha, h_list, L, beta, out);
    if (he->parsed())
      return run_heat(family, alpha, h, L, dt, tfinal, init, snapshots, beta,
                      LM_factor, out);
    if (bu->parsed())
      return run_burgers(family, alpha, h, L, dt, tfinal, kappa, flux, init,
                         snapshots, out);
    if (tf->parsed())
      return run_thinfilm(family, alpha, h, L, dt, tfinal, lambda, snapshots, out);
    if (st->parsed()) return run_selftest(seed);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
