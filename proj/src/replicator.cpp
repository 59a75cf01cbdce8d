#include "gamedyn/replicator.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gamedyn/game_io.h"

namespace gamedyn {

void replicator_field(const Game& g, const double* x, double* out,
                      FieldWorkspace& ws) {
  int n = g.num_players();
  ws.util.assign(g.dim(), 0.0);
  ws.prefix.resize(n + 1);
  ws.suffix.resize(n + 1);
  for (int z = 0; z < g.profile_count(); ++z) {
    ws.prefix[0] = 1.0;
    for (int p = 0; p < n; ++p)
      ws.prefix[p + 1] = ws.prefix[p] * x[g.offset(p) + g.strategy_of(z, p)];
    ws.suffix[n] = 1.0;
    for (int p = n - 1; p >= 0; --p)
      ws.suffix[p] = ws.suffix[p + 1] * x[g.offset(p) + g.strategy_of(z, p)];
    for (int p = 0; p < n; ++p) {
      double w = ws.prefix[p] * ws.suffix[p + 1];  // others' joint probability
      ws.util[g.offset(p) + g.strategy_of(z, p)] += w * g.payoff(z, p);
    }
  }
  for (int p = 0; p < n; ++p) {
    int off = g.offset(p), c = g.strategy_counts()[p];
    double avg = 0.0;
    for (int s = 0; s < c; ++s) avg += x[off + s] * ws.util[off + s];
    for (int s = 0; s < c; ++s) out[off + s] = x[off + s] * (ws.util[off + s] - avg);
  }
}

State replicator_field(const Game& g, const State& x) {
  State out(g.dim());
  FieldWorkspace ws;
  replicator_field(g, x.data(), out.data(), ws);
  return out;
}

void replicator_field_alt(const Game& g, const double* x, double* out,
                          FieldWorkspace& ws) {
  int n = g.num_players();
  for (int p = 0; p < n; ++p) {
    int off = g.offset(p), c = g.strategy_counts()[p];
    int antis = g.antiprofile_count(p);
    ws.anti_w.assign(antis, 1.0);
    for (int a = 0; a < antis; ++a) {
      int z = g.compose(p, a, 0);
      double w = 1.0;
      for (int q = 0; q < n; ++q)
        if (q != p) w *= x[g.offset(q) + g.strategy_of(z, q)];
      ws.anti_w[a] = w;
    }
    for (int s = 0; s < c; ++s) {
      double acc = 0.0;
      for (int t = 0; t < c; ++t) {
        double inner = 0.0;
        for (int a = 0; a < antis; ++a)
          inner += ws.anti_w[a] * (g.payoff(g.compose(p, a, s), p) -
                                   g.payoff(g.compose(p, a, t), p));
        acc += x[off + t] * inner;
      }
      out[off + s] = x[off + s] * acc;
    }
  }
}

State replicator_field_alt(const Game& g, const State& x) {
  State out(g.dim());
  FieldWorkspace ws;
  replicator_field_alt(g, x.data(), out.data(), ws);
  return out;
}

namespace {

struct Stepper {
  const Game& g;
  double dt;
  double sign;
  double renorm_tol;
  FieldWorkspace ws;
  State k1, k2, k3, k4, tmp;
  double max_drift = 0.0;

  Stepper(const Game& g_, const IntegratorConfig& cfg)
      : g(g_),
        dt(cfg.dt),
        sign(cfg.reverse ? -1.0 : 1.0),
        renorm_tol(cfg.renorm_tol),
        k1(g_.dim()),
        k2(g_.dim()),
        k3(g_.dim()),
        k4(g_.dim()),
        tmp(g_.dim()) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  }

  void step(State& x) {
    int d = g.dim();
    replicator_field(g, x.data(), k1.data(), ws);
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + sign * 0.5 * dt * k1[i];
    replicator_field(g, tmp.data(), k2.data(), ws);
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + sign * 0.5 * dt * k2[i];
    replicator_field(g, tmp.data(), k3.data(), ws);
    for (int i = 0; i < d; ++i) tmp[i] = x[i] + sign * dt * k3[i];
    replicator_field(g, tmp.data(), k4.data(), ws);
    for (int i = 0; i < d; ++i)
      x[i] += sign * dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    for (int p = 0; p < g.num_players(); ++p) {
      int off = g.offset(p), c = g.strategy_counts()[p];
      double sum = 0.0;
      for (int s = 0; s < c; ++s) sum += x[off + s];
      double drift = std::abs(sum - 1.0);
      if (drift > max_drift) max_drift = drift;
      if (drift > renorm_tol) {
        double clamped = 0.0;
        for (int s = 0; s < c; ++s) {
          if (x[off + s] < 0.0) x[off + s] = 0.0;
          clamped += x[off + s];
        }
        if (clamped <= 0.0) throw std::runtime_error("state collapsed during renormalization");
        for (int s = 0; s < c; ++s) x[off + s] /= clamped;
      }
    }
  }
};

void check_finite(const State& x, double t) {
  for (double v : x)
    if (!std::isfinite(v))
      throw std::runtime_error("integration diverged at t = " + format_double(t));
}

}  // namespace

void integrate_observe(const Game& g, const State& x0, double t_max,
                       const IntegratorConfig& cfg,
                       const std::function<void(double, const State&)>& observe) {
  if (int(x0.size()) != g.dim()) throw std::invalid_argument("state size mismatch");
  if (t_max < 0.0) throw std::invalid_argument("t_max must be nonnegative");
  Stepper st(g, cfg);
  State x = x0;
  long long steps = llround(t_max / cfg.dt);
  observe(0.0, x);
  for (long long k = 1; k <= steps; ++k) {
    st.step(x);
    double t = double(k) * cfg.dt;
    check_finite(x, t);
    observe(t, x);
  }
}

Trajectory integrate(const Game& g, const State& x0, double t_max,
                     const IntegratorConfig& cfg) {
  if (int(x0.size()) != g.dim()) throw std::invalid_argument("state size mismatch");
  if (t_max < 0.0) throw std::invalid_argument("t_max must be nonnegative");
  Trajectory tr;
  Stepper st(g, cfg);
  State x = x0;
  long long steps = llround(t_max / cfg.dt);
  tr.times.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  tr.times.push_back(0.0);
  tr.states.push_back(x);
  for (long long k = 1; k <= steps; ++k) {
    st.step(x);
    double t = double(k) * cfg.dt;
    check_finite(x, t);
    tr.times.push_back(t);
    tr.states.push_back(x);
  }
  tr.max_drift = st.max_drift;
  return tr;
}

State flow_endpoint(const Game& g, const State& x0, double t_max,
                    const IntegratorConfig& cfg) {
  Stepper st(g, cfg);
  State x = x0;
  long long steps = llround(t_max / cfg.dt);
  for (long long k = 1; k <= steps; ++k) st.step(x);
  check_finite(x, t_max);
  return x;
}

double subgame_invariance_check(const Game& g, const SubgameSpec& spec,
                                const State& x0, double t_max,
                                const IntegratorConfig& cfg) {
  State r0 = project_state(g, spec, x0);  // validates the support
  Game sub = restrict_game(g, spec);
  Trajectory full = integrate(g, x0, t_max, cfg);
  Trajectory part = integrate(sub, r0, t_max, cfg);
  double worst = 0.0;
  for (std::size_t k = 0; k < full.states.size(); ++k) {
    State lifted = lift_state(g, spec, part.states[k]);
    for (int i = 0; i < g.dim(); ++i)
      worst = std::max(worst, std::abs(lifted[i] - full.states[k][i]));
  }
  return worst;
}

double interior_divergence(const Game& g, const State& x, double h) {
  for (double v : x)
    if (v < 10.0 * h)
      throw std::invalid_argument("interior_divergence needs coordinates >= 10h");

  FieldWorkspace ws;
  State f(g.dim());
  double div = 0.0;
  auto log_rate_gap = [&](const State& y, int off, int s) {
    replicator_field(g, y.data(), f.data(), ws);
    return f[off + s] / y[off + s] - f[off] / y[off];
  };
  for (int p = 0; p < g.num_players(); ++p) {
    int off = g.offset(p), c = g.strategy_counts()[p];
    for (int s = 1; s < c; ++s) {
      // scale strategy s by e^(+-h) within player p's simplex; this moves
      // the log-ratio coordinate y^p_s by exactly +-h and nothing else
      State plus = x, minus = x;
      double zp = 1.0 + x[off + s] * (std::exp(h) - 1.0);
      double zm = 1.0 + x[off + s] * (std::exp(-h) - 1.0);
      for (int t = 0; t < c; ++t) {
        plus[off + t] = x[off + t] / zp;
        minus[off + t] = x[off + t] / zm;
      }
      plus[off + s] = x[off + s] * std::exp(h) / zp;
      minus[off + s] = x[off + s] * std::exp(-h) / zm;
      div += (log_rate_gap(plus, off, s) - log_rate_gap(minus, off, s)) / (2.0 * h);
    }
  }
  return div;
}

double kl_divergence_sum(const Game& g, const State& ref, const State& x) {
  double acc = 0.0;
  for (int p = 0; p < g.num_players(); ++p) {
    int off = g.offset(p), c = g.strategy_counts()[p];
    for (int s = 0; s < c; ++s) {
      if (ref[off + s] <= 0.0) continue;
      acc += ref[off + s] * std::log(ref[off + s] / x[off + s]);
    }
  }
  return acc;
}

std::string trajectory_csv(const Game& g, const Trajectory& tr) {
  std::ostringstream out;
  out << "t";
  for (int p = 0; p < g.num_players(); ++p)
    for (int s = 0; s < g.strategy_counts()[p]; ++s)
      out << "," << p << "_" << g.label(p, s);
  out << "\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    out << format_double(tr.times[k]);
    for (double v : tr.states[k]) out << "," << format_double(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace gamedyn
