#pragma once

#include <vector>

#include "flap/grid.hpp"
#include "flap/operator.hpp"
#include "flap/weights.hpp"

// Explicit time integration of the fractional heat equation, the fractal
// Burgers equation and the fractional thin-film equation in similarity
// variables. Heat and Burgers use the truncated difference form of the
// operator (unit column sums, so window mass is exact while the data stays
// clear of the edges); the thin film is a conservative face-flux update.

namespace flap {

enum class PdeKind { Heat, Burgers, ThinFilm };
enum class FluxKind { Godunov, LaxFriedrichs };

/// How exterior values are filled when the operator reaches past the
/// window: zeros, per-side constants, or constants plus an algebraic tail
/// with the far-field correction beyond the extension radius.
struct ExteriorPolicy {
  enum class Kind { Zero, Constant, Tail };
  Kind kind = Kind::Zero;
  double c_left = 0.0;
  double c_right = 0.0;
  double beta = 1.0;        // tail decay exponent (Tail only)
  double L_M_factor = 3.0;  // extension radius as a multiple of L (Tail only)
};

struct EvolutionConfig {
  PdeKind kind = PdeKind::Heat;
  WeightSet ws;
  double dt = 0.0;
  double t_final = 0.0;
  double kappa = 1.0;    // Burgers diffusion coefficient
  double lambda = 0.0;   // thin-film drift; 0 selects the steady-state value
  ExteriorPolicy exterior;
  FluxKind flux = FluxKind::Godunov;
  double safety = 0.9;
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<GridField> fields;
  std::vector<double> masses;  // h sum u at each snapshot
};

/// Drift making u_inf = (1 - x^2)_+^{1 + alpha/2} stationary:
/// lambda = 2 (1 + alpha) K_{1,alpha}.
double thinfilm_steady_lambda(double alpha);

/// One explicit Euler step of u_t + (-Delta_h)^{alpha/2} u = 0.
/// Requires 1 + dt w_0 >= 0.
GridField step_heat(const WeightSet& ws, const GridField& f, double dt,
                    const ExteriorPolicy& exterior);

/// One step of u_t + (u^2/2)_x + kappa (-Delta_h)^{alpha/2} u = 0 with the
/// chosen numerical flux.
GridField step_burgers(const WeightSet& ws, const GridField& f, double dt,
                       double kappa, FluxKind flux,
                       const ExteriorPolicy& exterior);

/// One conservative step of u_t = (u p_x)_x + lambda (x u)_x with
/// p = (-Delta_h)^{alpha/2} u; face fluxes with arithmetic-mean face values
/// and zero flux through the window ends. Throws on violation of the
/// explicit step restriction (advective and diffusive parts).
GridField step_thinfilm(const WeightSet& ws, const GridField& f, double dt,
                        double lambda);

/// Largest admissible thin-film step for the current state (safety 1).
double thinfilm_max_dt(const WeightSet& ws, const GridField& f, double lambda);

/// Integrate to t_final recording snapshots at the first step crossing
/// each requested time (u0 is always the first snapshot). The thin-film
/// step is subcycled to its admissible size; dt then acts as a cap.
EvolutionTrace run(const EvolutionConfig& config, const GridField& u0,
                   const std::vector<double>& snapshot_times);

}  // namespace flap
