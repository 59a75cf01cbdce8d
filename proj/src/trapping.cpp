#include "gamedyn/trapping.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace gamedyn {

std::optional<EscapingArc> find_escaping_arc(const Game& g,
                                             const SubgameSpec& y) {
  ResponseGraph rg = build_response_graph(g);
  std::vector<bool> inside(g.profile_count(), false);
  for (int z = 0; z < g.profile_count(); ++z)
    inside[z] = spec_contains_profile(y, g.profile_at(z));
  for (const Arc& a : rg.arcs())
    if (inside[a.tail] && !inside[a.head])
      return EscapingArc{a.tail, a.head, a.player};
  return std::nullopt;
}

State sample_neighborhood(const Game& g, const SubgameSpec& y, double radius,
                          Rng& rng) {
  State x(g.dim(), 0.0);
  for (int p = 0; p < g.num_players(); ++p) {
    int off = g.offset(p), c = g.strategy_counts()[p];
    std::vector<bool> inside(c, false);
    for (int s : y.sets[p]) inside[s] = true;
    double outside_mass = 0.0;
    for (int s = 0; s < c; ++s) {
      if (inside[s]) continue;
      x[off + s] = radius * rng.next_double(1e-6, 1.0 - 1e-6);
      outside_mass += x[off + s];
    }
    double rest = 1.0 - outside_mass;
    if (rest <= 0.0) throw std::runtime_error("neighborhood radius leaves no inside mass");
    double total = 0.0;
    std::vector<double> w(y.sets[p].size());
    for (auto& v : w) {
      v = -std::log(1.0 - rng.next_double());
      total += v;
    }
    for (std::size_t j = 0; j < w.size(); ++j)
      x[off + y.sets[p][j]] = rest * w[j] / total;
  }
  return x;
}

TrappingCertificate trapping_certificate(const Game& g, const SubgameSpec& y,
                                         int samples, uint64_t seed) {
  if (!is_strict(g))
    throw std::invalid_argument("trapping certificate requires a strict game");
  if (auto esc = find_escaping_arc(g, y)) {
    throw std::invalid_argument(
        "subgame is not attracting: arc " + std::to_string(esc->tail) + " -> " +
        std::to_string(esc->head) + " (player " + std::to_string(esc->player) +
        ") leaves it");
  }

  TrappingCertificate cert;
  cert.subgame = y;
  int n = g.num_players();

  // classify each player's antiprofiles by whether the others stay inside y
  std::vector<std::vector<bool>> anti_inside(n);
  std::vector<int> q_count(n, 0);  // antiprofiles with someone outside
  for (int p = 0; p < n; ++p) {
    anti_inside[p].resize(g.antiprofile_count(p));
    for (int a = 0; a < g.antiprofile_count(p); ++a) {
      int z = g.compose(p, a, 0);
      bool ins = true;
      for (int q = 0; q < n && ins; ++q) {
        if (q == p) continue;
        int sq = g.strategy_of(z, q);
        ins = std::binary_search(y.sets[q].begin(), y.sets[q].end(), sq);
      }
      anti_inside[p][a] = ins;
      if (!ins) ++q_count[p];
    }
  }

  double radius = std::numeric_limits<double>::infinity();
  for (int p = 0; p < n; ++p) {
    int c = g.strategy_counts()[p];
    std::vector<int> outside_strats;
    for (int s = 0; s < c; ++s)
      if (!std::binary_search(y.sets[p].begin(), y.sets[p].end(), s))
        outside_strats.push_back(s);
    if (outside_strats.empty()) continue;
    int lp = int(outside_strats.size());
    int q = q_count[p];

    for (int s : outside_strats) {
      TrappingCertificate::OutsideStrategy rec;
      rec.player = p;
      rec.strategy = s;

      for (int t : y.sets[p]) {
        double worst_in = -std::numeric_limits<double>::infinity();
        double worst_mix = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < g.antiprofile_count(p); ++a) {
          double gap = g.payoff(g.compose(p, a, s), p) -
                       g.payoff(g.compose(p, a, t), p);
          if (anti_inside[p][a])
            worst_in = std::max(worst_in, gap);
          else
            worst_mix = std::max(worst_mix, gap);
        }
        rec.adv_inside.push_back(worst_in);
        rec.adv_mixed.push_back(q > 0 ? worst_mix : 0.0);
      }

      rec.adv_outside = -std::numeric_limits<double>::infinity();
      for (int t : outside_strats)
        for (int a = 0; a < g.antiprofile_count(p); ++a)
          rec.adv_outside = std::max(
              rec.adv_outside, g.payoff(g.compose(p, a, s), p) -
                                   g.payoff(g.compose(p, a, t), p));

      rec.worst_inside = *std::max_element(rec.adv_inside.begin(),
                                           rec.adv_inside.end());
      if (rec.worst_inside >= 0.0)
        throw std::runtime_error(
            "inside advantage is non-negative for an outside strategy; this "
            "contradicts the attracting hypothesis");

      double sum_in = 0.0, sum_mix_pos = 0.0;
      for (double v : rec.adv_inside) sum_in += v;
      for (double v : rec.adv_mixed) sum_mix_pos += std::max(v, 0.0);
      rec.slack = -double(lp) * rec.worst_inside - double(q) * sum_in +
                  double(q) * sum_mix_pos +
                  std::max(rec.adv_outside, 0.0) * double(lp);

      rec.radius_bound = rec.slack > 0.0
                             ? -rec.worst_inside / rec.slack
                             : std::numeric_limits<double>::infinity();
      if (q > 0) rec.radius_bound = std::min(rec.radius_bound, 0.5 / double(q));

      radius = std::min(radius, rec.radius_bound);
      cert.outside.push_back(std::move(rec));
    }
  }

  if (cert.outside.empty()) {
    // the subgame is the whole game; nothing to trap
    cert.radius = 0.5;
    cert.audit.samples = 0;
    cert.audit.all_negative = true;
    cert.audit.max_velocity = 0.0;
    return cert;
  }
  cert.radius = radius;

  Rng rng(seed);
  FieldWorkspace ws;
  State f(g.dim());
  cert.audit.samples = samples;
  cert.audit.all_negative = true;
  cert.audit.max_velocity = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    State x = sample_neighborhood(g, y, cert.radius, rng);
    replicator_field(g, x.data(), f.data(), ws);
    for (const auto& rec : cert.outside) {
      double v = f[g.offset(rec.player) + rec.strategy];
      cert.audit.max_velocity = std::max(cert.audit.max_velocity, v);
      if (v >= 0.0) cert.audit.all_negative = false;
    }
  }
  if (!cert.audit.all_negative)
    throw std::runtime_error("neighborhood audit found a non-negative outside velocity");
  return cert;
}

ConvergenceReport converge_check(const Game& g, const SubgameSpec& y,
                                 double radius, int samples, double t_max,
                                 const IntegratorConfig& cfg, uint64_t seed) {
  std::vector<std::pair<int, int>> outside;  // (player, strategy)
  for (int p = 0; p < g.num_players(); ++p)
    for (int s = 0; s < g.strategy_counts()[p]; ++s)
      if (!std::binary_search(y.sets[p].begin(), y.sets[p].end(), s))
        outside.emplace_back(p, s);

  ConvergenceReport rep;
  rep.samples = samples;
  rep.all_monotone = true;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    State x0 = sample_neighborhood(g, y, radius, rng);
    std::vector<double> prev(outside.size());
    for (std::size_t j = 0; j < outside.size(); ++j)
      prev[j] = x0[g.offset(outside[j].first) + outside[j].second];
    bool monotone = true;
    double final_out = 0.0;
    integrate_observe(g, x0, t_max, cfg, [&](double t, const State& x) {
      final_out = 0.0;
      for (std::size_t j = 0; j < outside.size(); ++j) {
        double v = x[g.offset(outside[j].first) + outside[j].second];
        if (t > 0.0 && v > prev[j]) monotone = false;
        prev[j] = v;
        final_out = std::max(final_out, v);
      }
    });
    if (!monotone) {
      rep.all_monotone = false;
      ++rep.monotone_failures;
    }
    rep.max_final_outside = std::max(rep.max_final_outside, final_out);
  }
  return rep;
}

std::string certificate_json(const Game& g, const TrappingCertificate& cert) {
  nlohmann::ordered_json j;
  j["game"] = g.name();
  j["subgame"] = cert.subgame.sets;
  j["radius"] = cert.radius;
  j["outside_strategies"] = nlohmann::ordered_json::array();
  for (const auto& rec : cert.outside) {
    nlohmann::ordered_json r;
    r["player"] = rec.player;
    r["strategy"] = rec.strategy;
    r["adv_inside"] = rec.adv_inside;
    r["adv_mixed"] = rec.adv_mixed;
    r["adv_outside"] = rec.adv_outside;
    r["worst_inside"] = rec.worst_inside;
    r["slack"] = rec.slack;
    r["radius_bound"] = rec.radius_bound;
    j["outside_strategies"].push_back(std::move(r));
  }
  j["audit"]["samples"] = cert.audit.samples;
  j["audit"]["all_negative"] = cert.audit.all_negative;
  j["audit"]["max_velocity"] = cert.audit.max_velocity;
  return j.dump(2) + "\n";
}

}  // namespace gamedyn
