#pragma once
#include <functional>

#include "gamedyn/game.h"

namespace gamedyn {

// Growth of each strategy share is its payoff edge over the holder's mean:
//   d/dt x^p_s = x^p_s (U_p(s; x_{-p}) - sum_t x^p_t U_p(t; x_{-p}))
// Coordinates that start at exactly zero stay exactly zero, so faces are
// invariant in the strongest possible sense.

struct FieldWorkspace {
  std::vector<double> util;
  std::vector<double> prefix, suffix;
  std::vector<double> anti_w;
};

void replicator_field(const Game& g, const double* x, double* out,
                      FieldWorkspace& ws);
State replicator_field(const Game& g, const State& x);

// Same dynamic, summed pairwise over opponent profiles instead of through
// expected utilities. Kept as a genuinely separate computation path; the two
// agree to 1e-12 on the simplex.
void replicator_field_alt(const Game& g, const double* x, double* out,
                          FieldWorkspace& ws);
State replicator_field_alt(const Game& g, const State& x);

struct IntegratorConfig {
  double dt = 0.01;
  bool reverse = false;        // integrate the negated field
  double renorm_tol = 1e-9;    // renormalize only past this drift
};

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  double max_drift = 0.0;      // worst per-player sum deviation before fixup

  const State& endpoint() const { return states.back(); }
};

// Classical fixed-step fourth-order Runge-Kutta. After each step a player's
// vector is projected back onto the simplex (clamp negatives, rescale) only
// if its sum drifted beyond renorm_tol. Throws if the state stops being
// finite.
Trajectory integrate(const Game& g, const State& x0, double t_max,
                     const IntegratorConfig& cfg = {});

// stepping without storage; observer sees every step including t = 0
void integrate_observe(const Game& g, const State& x0, double t_max,
                       const IntegratorConfig& cfg,
                       const std::function<void(double, const State&)>& observe);

State flow_endpoint(const Game& g, const State& x0, double t_max,
                    const IntegratorConfig& cfg = {});

// Integrates x0 in the full game and, in parallel, in the restricted game
// lifted back to full coordinates; returns the largest pointwise gap. x0
// must be supported inside the subgame.
double subgame_invariance_check(const Game& g, const SubgameSpec& spec,
                                const State& x0, double t_max,
                                const IntegratorConfig& cfg = {});

// Divergence of the field at an interior point, in the per-player
// log-ratio coordinates y^p_s = log(x^p_s / x^p_0), estimated by central
// differences. The replicator is divergence-free in these coordinates, so
// values near zero are expected. Requires every coordinate >= 10h.
double interior_divergence(const Game& g, const State& x, double h = 1e-5);

// sum over players of KL(ref^p || x^p); conserved for zero-sum games at an
// interior equilibrium ref
double kl_divergence_sum(const Game& g, const State& ref, const State& x);

// CSV with header t,<player>_<strategy>,...
std::string trajectory_csv(const Game& g, const Trajectory& tr);

}  // namespace gamedyn
