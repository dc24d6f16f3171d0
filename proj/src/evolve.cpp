#include "flap/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "flap/oracle.hpp"

namespace flap {

namespace {

std::vector<double> op_with_policy(const WeightSet& ws, const GridField& f,
                                   const ExteriorPolicy& ext) {
  switch (ext.kind) {
    case ExteriorPolicy::Kind::Zero:
      return apply_difference(ws, f, 0.0, 0.0);
    case ExteriorPolicy::Kind::Constant:
      return apply_difference(ws, f, ext.c_left, ext.c_right);
    case ExteriorPolicy::Kind::Tail: {
      GridField tmp = f;
      TailSpec tail;
      tail.L = f.x(f.size() - 1);
      tail.L_M = ext.L_M_factor * tail.L;
      tail.beta = ext.beta;
      tail.u_left = f.u.front();
      tail.u_right = f.u.back();
      tail.offset_left = ext.c_left;
      tail.offset_right = ext.c_right;
      return apply_truncated(ws, tmp, tail);
    }
  }
  throw std::invalid_argument("op_with_policy: unknown exterior kind");
}

double godunov_flux(double ul, double ur) {
  // Exact Riemann flux for the convex flux u^2/2.
  if (ul <= ur) {
    if (ul > 0.0) return 0.5 * ul * ul;
    if (ur < 0.0) return 0.5 * ur * ur;
    return 0.0;
  }
  return 0.5 * std::max(ul * ul, ur * ur);
}

double llf_flux(double ul, double ur) {
  const double a = std::max(std::abs(ul), std::abs(ur));
  return 0.25 * (ul * ul + ur * ur) - 0.5 * a * (ur - ul);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Max of the rescaled symbol over [-pi, pi], attained at pi for the
// families here; bounds the diffusive stability of the thin-film step.
double symbol_at_pi(const WeightSet& ws) {
  double s = ws.w[0];
  for (int k = 1; k <= ws.m; ++k)
    s += 2.0 * (k % 2 == 0 ? 1.0 : -1.0) * ws.w[static_cast<size_t>(k)];
  return -std::pow(ws.h, ws.alpha) * s;
}

}  // namespace

double thinfilm_steady_lambda(double alpha) {
  return 2.0 * (1.0 + alpha) * beta_bump_constant(1, alpha);
}

GridField step_heat(const WeightSet& ws, const GridField& f, double dt,
                    const ExteriorPolicy& exterior) {
  if (1.0 + dt * ws.w[0] < -1e-12)
    throw std::invalid_argument("step_heat: CFL violation (1 + dt w_0 < 0)");
  const std::vector<double> lu = op_with_policy(ws, f, exterior);
  GridField out = f;
  for (long i = 0; i < f.size(); ++i)
    out.u[static_cast<size_t>(i)] -= dt * lu[static_cast<size_t>(i)];
  return out;
}

GridField step_burgers(const WeightSet& ws, const GridField& f, double dt,
                       double kappa, FluxKind flux,
                       const ExteriorPolicy& exterior) {
  const long n = f.size();
  const double h = f.h;
  if (kappa > 0.0 && 1.0 + dt * kappa * ws.w[0] < -1e-12)
    throw std::invalid_argument("step_burgers: diffusive CFL violation");
  if (dt * max_abs(f.u) > h * (1.0 + 1e-12))
    throw std::invalid_argument("step_burgers: advective CFL violation");

  const double ghost_l =
      exterior.kind == ExteriorPolicy::Kind::Zero ? 0.0 : exterior.c_left;
  const double ghost_r =
      exterior.kind == ExteriorPolicy::Kind::Zero ? 0.0 : exterior.c_right;
  auto numflux = (flux == FluxKind::Godunov) ? godunov_flux : llf_flux;

  std::vector<double> F(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    const double ul = (i == 0) ? ghost_l : f.u[static_cast<size_t>(i - 1)];
    const double ur = (i == n) ? ghost_r : f.u[static_cast<size_t>(i)];
    F[static_cast<size_t>(i)] = numflux(ul, ur);
  }

  std::vector<double> lu;
  if (kappa > 0.0) lu = op_with_policy(ws, f, exterior);

  GridField out = f;
  for (long i = 0; i < n; ++i) {
    double v = f.u[static_cast<size_t>(i)] -
               dt / h * (F[static_cast<size_t>(i + 1)] - F[static_cast<size_t>(i)]);
    if (kappa > 0.0) v -= dt * kappa * lu[static_cast<size_t>(i)];
    out.u[static_cast<size_t>(i)] = v;
  }
  return out;
}

namespace {

// Admissible explicit step from the current state: advective bound from
// the face speeds |p_x + lambda x| and a von Neumann bound for the
// linearized diffusive part, dt <= h^{2+alpha} / (2 M(pi) max u).
double thinfilm_admissible(const WeightSet& ws, const GridField& f,
                           const std::vector<double>& p, double lambda,
                           double mpi) {
  const long n = f.size();
  const double h = f.h;
  double speed = 0.0;
  for (long i = 0; i + 1 < n; ++i) {
    const double xface = 0.5 * (f.x(i) + f.x(i + 1));
    speed = std::max(speed,
                     std::abs((p[static_cast<size_t>(i + 1)] - p[static_cast<size_t>(i)]) / h +
                              lambda * xface));
  }
  double umax = 0.0;
  for (double v : f.u) umax = std::max(umax, v);
  const double dt_adv = speed > 0.0 ? h / speed : 1e300;
  const double dt_diff =
      umax > 0.0 ? std::pow(h, 2.0 + ws.alpha) / (2.0 * mpi * umax) : 1e300;
  return std::min(dt_adv, dt_diff);
}

// Face fluxes Phi_{i+1/2} for i = 0..n-2; zero flux through the ends.
// The face mobility is the arithmetic average clamped at zero: contact-line
// undershoots would otherwise turn the mobility negative and feed an
// anti-diffusive instability. Clamping keeps the telescoping flux form, so
// mass conservation is unaffected.
GridField thinfilm_face_update(const GridField& f, const std::vector<double>& p,
                               double dt, double lambda) {
  const long n = f.size();
  const double h = f.h;
  GridField out = f;
  double phi_prev = 0.0;
  for (long i = 0; i < n; ++i) {
    double phi = 0.0;
    if (i < n - 1) {
      const double ubar = std::max(0.5 * (f.u[static_cast<size_t>(i)] +
                                          f.u[static_cast<size_t>(i + 1)]),
                                   0.0);
      const double xface = 0.5 * (f.x(i) + f.x(i + 1));
      phi = ubar * ((p[static_cast<size_t>(i + 1)] - p[static_cast<size_t>(i)]) / h +
                    lambda * xface);
    }
    out.u[static_cast<size_t>(i)] += dt / h * (phi - phi_prev);
    phi_prev = phi;
  }
  return out;
}

}  // namespace

double thinfilm_max_dt(const WeightSet& ws, const GridField& f, double lambda) {
  FastConvolver conv(ws, f.size());
  const std::vector<double> p = conv.apply(f.u);
  return thinfilm_admissible(ws, f, p, lambda, symbol_at_pi(ws));
}

GridField step_thinfilm(const WeightSet& ws, const GridField& f, double dt,
                        double lambda) {
  FastConvolver conv(ws, f.size());
  const std::vector<double> p = conv.apply(f.u);
  if (dt > thinfilm_admissible(ws, f, p, lambda, symbol_at_pi(ws)) * (1.0 + 1e-9))
    throw std::invalid_argument("step_thinfilm: step restriction violated");
  return thinfilm_face_update(f, p, dt, lambda);
}

EvolutionTrace run(const EvolutionConfig& config, const GridField& u0,
                   const std::vector<double>& snapshot_times) {
  const WeightSet& ws = config.ws;
  const double dt = config.dt;
  if (!(dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");

  // Construction-time CFL checks with the configured safety factor.
  if (config.kind == PdeKind::Heat && dt * (-ws.w[0]) > config.safety)
    throw std::invalid_argument("run: heat CFL violated (dt > safety C_max h^alpha)");
  if (config.kind == PdeKind::Burgers) {
    if (config.kappa > 0.0 && dt * config.kappa * (-ws.w[0]) > config.safety)
      throw std::invalid_argument("run: Burgers diffusive CFL violated");
    const double um = max_abs(u0.u);
    if (um > 0.0 && dt * um > config.safety * u0.h)
      throw std::invalid_argument("run: Burgers advective CFL violated");
  }

  const double lambda = (config.kind == PdeKind::ThinFilm && config.lambda == 0.0)
                            ? thinfilm_steady_lambda(ws.alpha)
                            : config.lambda;
  std::unique_ptr<FastConvolver> conv;
  if (config.kind == PdeKind::ThinFilm)
    conv = std::make_unique<FastConvolver>(ws, u0.size());

  std::vector<double> targets(snapshot_times);
  std::sort(targets.begin(), targets.end());

  EvolutionTrace trace;
  auto record = [&](double t, const GridField& f) {
    trace.times.push_back(t);
    trace.fields.push_back(f);
    double mass = 0.0;
    for (double v : f.u) mass += v;
    trace.masses.push_back(mass * f.h);
  };

  GridField u = u0;
  record(0.0, u);
  size_t next_target = 0;
  while (next_target < targets.size() && targets[next_target] <= 1e-15)
    ++next_target;

  const double guard_level = 2.0 * max_abs(u0.u) + 1e-9;
  const double mpi = (config.kind == PdeKind::ThinFilm) ? symbol_at_pi(ws) : 0.0;
  double t = 0.0;
  while (t < config.t_final - 1e-15) {
    double step = std::min(dt, config.t_final - t);
    switch (config.kind) {
      case PdeKind::Heat:
        u = step_heat(ws, u, step, config.exterior);
        break;
      case PdeKind::Burgers:
        u = step_burgers(ws, u, step, config.kappa, config.flux, config.exterior);
        break;
      case PdeKind::ThinFilm: {
        const std::vector<double> p = conv->apply(u.u);
        step = std::min(step, config.safety * thinfilm_admissible(ws, u, p, lambda, mpi));
        u = thinfilm_face_update(u, p, step, lambda);
        if (max_abs(u.u) > guard_level)
          throw std::runtime_error("run: thin-film divergence guard tripped");
        break;
      }
    }
    t += step;
    while (next_target < targets.size() && t >= targets[next_target] - 1e-12) {
      record(t, u);
      ++next_target;
    }
  }
  return trace;
}

}  // namespace flap
