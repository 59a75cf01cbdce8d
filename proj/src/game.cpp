#include "gamedyn/game.h"

#include <cmath>
#include <stdexcept>

namespace gamedyn {

Game::Game(std::vector<int> strategy_counts, std::vector<double> payoffs,
           std::vector<std::vector<std::string>> labels, std::string name)
    : counts_(std::move(strategy_counts)),
      payoffs_(std::move(payoffs)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (counts_.empty()) throw std::invalid_argument("game needs at least one player");
  int n = int(counts_.size());
  long long prod = 1;
  dim_ = 0;
  offsets_.resize(n);
  for (int p = 0; p < n; ++p) {
    if (counts_[p] < 1) throw std::invalid_argument("player needs at least one strategy");
    offsets_[p] = dim_;
    dim_ += counts_[p];
    prod *= counts_[p];
    if (prod > 1'000'000) throw std::invalid_argument("profile space too large");
  }
  profile_count_ = int(prod);
  if (payoffs_.size() != std::size_t(profile_count_) * n)
    throw std::invalid_argument("payoff tensor has wrong size");
  for (double v : payoffs_)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite payoff");

  strides_.assign(n, 1);
  for (int p = n - 2; p >= 0; --p) strides_[p] = strides_[p + 1] * counts_[p + 1];

  digits_.resize(std::size_t(profile_count_) * n);
  for (int z = 0; z < profile_count_; ++z)
    for (int p = 0; p < n; ++p)
      digits_[std::size_t(z) * n + p] = uint16_t((z / strides_[p]) % counts_[p]);

  anti_base_.resize(n);
  for (int p = 0; p < n; ++p) {
    anti_base_[p].reserve(profile_count_ / counts_[p]);
    for (int z = 0; z < profile_count_; ++z)
      if (strategy_of(z, p) == 0) anti_base_[p].push_back(z);
  }

  if (labels_.empty()) {
    labels_.resize(n);
    for (int p = 0; p < n; ++p)
      for (int s = 0; s < counts_[p]; ++s)
        labels_[p].push_back("s" + std::to_string(s));
  } else {
    if (int(labels_.size()) != n) throw std::invalid_argument("label rows != players");
    for (int p = 0; p < n; ++p)
      if (int(labels_[p].size()) != counts_[p])
        throw std::invalid_argument("label count mismatch for player " + std::to_string(p));
  }
}

int Game::profile_index(const PureProfile& p) const {
  if (int(p.strategies.size()) != num_players())
    throw std::invalid_argument("profile has wrong player count");
  int z = 0;
  for (int i = 0; i < num_players(); ++i) {
    int s = p.strategies[i];
    if (s < 0 || s >= counts_[i]) throw std::invalid_argument("strategy out of range");
    z += s * strides_[i];
  }
  return z;
}

PureProfile Game::profile_at(int index) const {
  PureProfile p;
  p.strategies.resize(num_players());
  for (int i = 0; i < num_players(); ++i) p.strategies[i] = strategy_of(index, i);
  return p;
}

std::vector<double> expected_utility(const Game& g, const State& x) {
  int n = g.num_players();
  std::vector<double> u(n, 0.0);
  for (int z = 0; z < g.profile_count(); ++z) {
    double w = 1.0;
    for (int p = 0; p < n; ++p) w *= x[g.offset(p) + g.strategy_of(z, p)];
    for (int p = 0; p < n; ++p) u[p] += w * g.payoff(z, p);
  }
  return u;
}

double pure_vs_mixed_utility(const Game& g, const State& x, int player,
                             int strategy) {
  double acc = 0.0;
  int n = g.num_players();
  for (int a = 0; a < g.antiprofile_count(player); ++a) {
    int z = g.compose(player, a, strategy);
    double w = 1.0;
    for (int p = 0; p < n; ++p)
      if (p != player) w *= x[g.offset(p) + g.strategy_of(z, p)];
    acc += w * g.payoff(z, player);
  }
  return acc;
}

std::optional<int> comparable(const Game& g, int profile_a, int profile_b) {
  int who = -1;
  for (int p = 0; p < g.num_players(); ++p) {
    if (g.strategy_of(profile_a, p) != g.strategy_of(profile_b, p)) {
      if (who >= 0) return std::nullopt;
      who = p;
    }
  }
  if (who < 0) return std::nullopt;  // identical profiles
  return who;
}

bool is_strict(const Game& g) {
  for (int p = 0; p < g.num_players(); ++p) {
    int c = g.strategy_counts()[p];
    for (int a = 0; a < g.antiprofile_count(p); ++a)
      for (int s = 0; s < c; ++s)
        for (int t = s + 1; t < c; ++t)
          if (g.payoff(g.compose(p, a, s), p) == g.payoff(g.compose(p, a, t), p))
            return false;
  }
  return true;
}

static void check_spec(const Game& g, const SubgameSpec& spec) {
  if (int(spec.sets.size()) != g.num_players())
    throw std::invalid_argument("subgame spec has wrong player count");
  for (int p = 0; p < g.num_players(); ++p) {
    const auto& set = spec.sets[p];
    if (set.empty()) throw std::invalid_argument("empty strategy set in subgame spec");
    int prev = -1;
    for (int s : set) {
      if (s <= prev) throw std::invalid_argument("subgame spec not sorted/unique");
      if (s >= g.strategy_counts()[p]) throw std::invalid_argument("subgame strategy out of range");
      prev = s;
    }
  }
}

Game restrict_game(const Game& g, const SubgameSpec& spec) {
  check_spec(g, spec);
  int n = g.num_players();
  std::vector<int> counts(n);
  std::vector<std::vector<std::string>> labels(n);
  for (int p = 0; p < n; ++p) {
    counts[p] = int(spec.sets[p].size());
    for (int s : spec.sets[p]) labels[p].push_back(g.label(p, s));
  }
  long long prod = 1;
  for (int c : counts) prod *= c;
  std::vector<double> payoffs(std::size_t(prod) * n);
  // walk restricted profiles in their own row-major order
  std::vector<int> idx(n, 0);
  for (long long rz = 0; rz < prod; ++rz) {
    PureProfile full;
    full.strategies.resize(n);
    for (int p = 0; p < n; ++p) full.strategies[p] = spec.sets[p][idx[p]];
    int z = g.profile_index(full);
    for (int p = 0; p < n; ++p) payoffs[std::size_t(rz) * n + p] = g.payoff(z, p);
    for (int p = n - 1; p >= 0; --p) {
      if (++idx[p] < counts[p]) break;
      idx[p] = 0;
    }
  }
  std::string name = g.name().empty() ? std::string() : g.name() + "|restricted";
  return Game(counts, std::move(payoffs), std::move(labels), name);
}

int lift_profile(const Game& full, const SubgameSpec& spec,
                 int restricted_profile) {
  check_spec(full, spec);
  int n = full.num_players();
  PureProfile p;
  p.strategies.resize(n);
  // decode restricted_profile against the restricted shape
  int rem = restricted_profile;
  std::vector<int> rcounts(n);
  for (int i = 0; i < n; ++i) rcounts[i] = int(spec.sets[i].size());
  for (int i = n - 1; i >= 0; --i) {
    p.strategies[i] = spec.sets[i][rem % rcounts[i]];
    rem /= rcounts[i];
  }
  return full.profile_index(p);
}

State lift_state(const Game& full, const SubgameSpec& spec,
                 const State& restricted) {
  check_spec(full, spec);
  State x(full.dim(), 0.0);
  int roff = 0;
  for (int p = 0; p < full.num_players(); ++p) {
    for (std::size_t j = 0; j < spec.sets[p].size(); ++j)
      x[full.offset(p) + spec.sets[p][j]] = restricted[roff + j];
    roff += int(spec.sets[p].size());
  }
  return x;
}

State project_state(const Game& full, const SubgameSpec& spec, const State& x,
                    double tol) {
  check_spec(full, spec);
  State r;
  for (int p = 0; p < full.num_players(); ++p) {
    std::size_t k = 0;
    for (int s = 0; s < full.strategy_counts()[p]; ++s) {
      bool inside = k < spec.sets[p].size() && spec.sets[p][k] == s;
      double v = x[full.offset(p) + s];
      if (inside) {
        r.push_back(v);
        ++k;
      } else if (std::abs(v) > tol) {
        throw std::invalid_argument("state has mass outside the subgame");
      }
    }
  }
  return r;
}

SubgameSpec support_subgame(const Game& g, const State& x, double tol) {
  SubgameSpec spec;
  spec.sets.resize(g.num_players());
  for (int p = 0; p < g.num_players(); ++p) {
    for (int s = 0; s < g.strategy_counts()[p]; ++s)
      if (x[g.offset(p) + s] > tol) spec.sets[p].push_back(s);
    if (spec.sets[p].empty())
      throw std::invalid_argument("state has empty support for player " + std::to_string(p));
  }
  return spec;
}

SubgameSpec iterated_strict_dominance(const Game& g) {
  int n = g.num_players();
  std::vector<std::vector<int>> active(n);
  for (int p = 0; p < n; ++p)
    for (int s = 0; s < g.strategy_counts()[p]; ++s) active[p].push_back(s);

  // antiprofiles over the currently active sets of the other players
  auto anti_active = [&](int player) {
    std::vector<int> antis;
    for (int a = 0; a < g.antiprofile_count(player); ++a) {
      int z = g.compose(player, a, 0);
      bool ok = true;
      for (int q = 0; q < n && ok; ++q) {
        if (q == player) continue;
        int sq = g.strategy_of(z, q);
        ok = false;
        for (int v : active[q])
          if (v == sq) { ok = true; break; }
      }
      if (ok) antis.push_back(a);
    }
    return antis;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p) {
      if (active[p].size() < 2) continue;
      auto antis = anti_active(p);
      std::vector<int> keep;
      for (int s : active[p]) {
        bool dominated = false;
        for (int t : active[p]) {
          if (t == s) continue;
          bool all_worse = true;
          for (int a : antis) {
            if (g.payoff(g.compose(p, a, s), p) >= g.payoff(g.compose(p, a, t), p)) {
              all_worse = false;
              break;
            }
          }
          if (all_worse) { dominated = true; break; }
        }
        if (!dominated) keep.push_back(s);
      }
      if (keep.size() != active[p].size()) {
        active[p] = std::move(keep);
        changed = true;
      }
    }
  }
  SubgameSpec spec;
  spec.sets = std::move(active);
  return spec;
}

SubgameSpec full_subgame(const Game& g) {
  SubgameSpec spec;
  spec.sets.resize(g.num_players());
  for (int p = 0; p < g.num_players(); ++p)
    for (int s = 0; s < g.strategy_counts()[p]; ++s) spec.sets[p].push_back(s);
  return spec;
}

bool spec_contains_profile(const SubgameSpec& spec, const PureProfile& p) {
  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    bool found = false;
    for (int s : spec.sets[i])
      if (s == p.strategies[i]) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

int subgame_profile_count(const SubgameSpec& spec) {
  int prod = 1;
  for (const auto& set : spec.sets) prod *= int(set.size());
  return prod;
}

State uniform_profile(const Game& g) {
  State x(g.dim());
  for (int p = 0; p < g.num_players(); ++p) {
    double v = 1.0 / g.strategy_counts()[p];
    for (int s = 0; s < g.strategy_counts()[p]; ++s) x[g.offset(p) + s] = v;
  }
  return x;
}

State vertex_profile(const Game& g, const PureProfile& p) {
  State x(g.dim(), 0.0);
  for (int i = 0; i < g.num_players(); ++i) x[g.offset(i) + p.strategies[i]] = 1.0;
  return x;
}

State vertex_profile(const Game& g, int profile) {
  return vertex_profile(g, g.profile_at(profile));
}

bool valid_profile(const Game& g, const State& x, double tol) {
  if (int(x.size()) != g.dim()) return false;
  for (int p = 0; p < g.num_players(); ++p) {
    double sum = 0.0;
    for (int s = 0; s < g.strategy_counts()[p]; ++s) {
      double v = x[g.offset(p) + s];
      if (!std::isfinite(v) || v < -tol) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace gamedyn
