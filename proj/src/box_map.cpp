#include "gamedyn/box_map.h"

#include <algorithm>

#include "gamedyn/parallel.h"
#include "gamedyn/rng.h"

namespace gamedyn {

std::vector<int> box_image(const Game& g, const BoxCover& cover, int box,
                           const BoxMapConfig& cfg, double padding) {
  std::vector<State> samples = cover.corner_points(box);
  samples.push_back(cover.center(box));
  Rng rng(mix_seed(cfg.seed, uint64_t(box)));
  for (int k = 0; k < cfg.random_samples; ++k)
    samples.push_back(cover.random_point(box, rng));

  IntegratorConfig icfg;
  icfg.dt = cfg.dt;
  std::vector<int> targets;
  for (const State& x0 : samples) {
    State end = flow_endpoint(g, x0, cfg.horizon, icfg);
    std::vector<int> hit = cover.boxes_near(end, padding);
    targets.insert(targets.end(), hit.begin(), hit.end());
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

BoxMapGraph build_box_map(const Game& g, const BoxCover& cover,
                          const BoxMapConfig& cfg) {
  double rho = cfg.padding < 0.0 ? cover.delta() : cfg.padding;
  BoxMapGraph graph;
  graph.padding = rho;
  graph.epsilon = rho + cover.delta();
  graph.adjacency.resize(cover.box_count());
  parallel_for(std::size_t(cover.box_count()), [&](std::size_t b) {
    graph.adjacency[b] = box_image(g, cover, int(b), cfg, rho);
  });
  for (const auto& row : graph.adjacency) graph.arc_count += (long long)row.size();
  return graph;
}

}  // namespace gamedyn
