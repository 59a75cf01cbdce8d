#include "gamedyn/witness.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "gamedyn/rng.h"
#include "json.hpp"

namespace gamedyn {

namespace {

double inf_dist(const State& a, const State& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

std::optional<ChainWitness> epsilon_chain_witness(const Game& g,
                                                  const State& from,
                                                  const State& to,
                                                  double epsilon,
                                                  const WitnessConfig& cfg) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (!valid_profile(g, from) || !valid_profile(g, to))
    throw std::invalid_argument("chain endpoints must be mixed profiles");

  // grid fine enough that hopping between padded box images stays under
  // epsilon: each hop jumps at most delta + padding = 2/denom <= epsilon/2
  int denom = int(std::ceil(4.0 / epsilon));
  BoxCover cover = [&] {
    try {
      return BoxCover(g.strategy_counts(), denom, cfg.box_budget);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) +
                                  "; a larger epsilon shrinks the cover");
    }
  }();
  double rho = cover.delta();

  IntegratorConfig icfg;
  icfg.dt = cfg.dt;
  State e0 = flow_endpoint(g, from, cfg.horizon, icfg);
  int start = cover.locate(e0);
  int goal = cover.locate(to);

  std::vector<int> pred_box(cover.box_count(), -1);
  std::vector<State> pred_sample(cover.box_count());
  std::vector<bool> seen(cover.box_count(), false);
  std::queue<int> frontier;
  seen[start] = true;
  frontier.push(start);

  BoxMapConfig bcfg;
  bcfg.horizon = cfg.horizon;
  bcfg.dt = cfg.dt;
  bcfg.random_samples = cfg.random_samples;
  bcfg.seed = cfg.seed;

  long long expanded = 0;
  bool found = start == goal;
  while (!found && !frontier.empty()) {
    int b = frontier.front();
    frontier.pop();
    if (++expanded > cfg.expand_budget)
      throw std::runtime_error(
          "chain search expanded " + std::to_string(cfg.expand_budget) +
          " boxes without reaching the goal; a larger epsilon shrinks the "
          "search");

    std::vector<State> samples = cover.corner_points(b);
    samples.push_back(cover.center(b));
    Rng rng(mix_seed(bcfg.seed, uint64_t(b)));
    for (int k = 0; k < bcfg.random_samples; ++k)
      samples.push_back(cover.random_point(b, rng));

    for (const State& s : samples) {
      State end = flow_endpoint(g, s, cfg.horizon, icfg);
      for (int t : cover.boxes_near(end, rho)) {
        if (seen[t]) continue;
        seen[t] = true;
        pred_box[t] = b;
        pred_sample[t] = s;
        if (t == goal) {
          found = true;
          break;
        }
        frontier.push(t);
      }
      if (found) break;
    }
  }
  if (!found) return std::nullopt;

  std::vector<int> path{goal};
  while (path.back() != start) path.push_back(pred_box[path.back()]);
  std::reverse(path.begin(), path.end());

  ChainWitness w;
  w.epsilon = epsilon;
  w.points.push_back(from);
  for (std::size_t i = 1; i < path.size(); ++i)
    w.points.push_back(pred_sample[path[i]]);
  w.points.push_back(to);

  for (std::size_t i = 0; i + 1 < w.points.size(); ++i) {
    State end = flow_endpoint(g, w.points[i], cfg.horizon, icfg);
    double jump = inf_dist(end, w.points[i + 1]);
    if (jump > epsilon)
      throw std::logic_error("chain refinement produced an oversized jump");
    w.times.push_back(cfg.horizon);
    w.jumps.push_back(jump);
  }
  return w;
}

std::string witness_json(const Game& g, const ChainWitness& w) {
  nlohmann::ordered_json j;
  j["game"] = g.name();
  j["epsilon"] = w.epsilon;
  j["hops"] = w.times.size();
  double worst = 0.0;
  for (double v : w.jumps) worst = std::max(worst, v);
  j["max_jump"] = worst;
  j["points"] = w.points;
  j["times"] = w.times;
  j["jumps"] = w.jumps;
  return j.dump(2) + "\n";
}

}  // namespace gamedyn
