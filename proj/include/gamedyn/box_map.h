#pragma once
#include <cstdint>
#include <vector>

#include "gamedyn/box_cover.h"
#include "gamedyn/game.h"
#include "gamedyn/replicator.h"

namespace gamedyn {

struct BoxMapConfig {
  double horizon = 1.0;   // flow time per application of the map
  double dt = 0.01;
  double padding = -1.0;  // image inflation; negative means one box diameter
  int random_samples = 8;
  uint64_t seed = 0;
};

// Directed graph over the boxes of a cover: an arc from box a to box b when
// the time-`horizon` flow of some sample of a, inflated by `padding`, meets
// b. Sample set per box: every corner combination, the center, and
// `random_samples` random interior points.
struct BoxMapGraph {
  std::vector<std::vector<int>> adjacency;  // sorted target lists
  double padding = 0.0;                     // resolved inflation radius
  double epsilon = 0.0;                     // padding + box diameter
  long long arc_count = 0;
};

BoxMapGraph build_box_map(const Game& g, const BoxCover& cover,
                          const BoxMapConfig& cfg = {});

// image boxes for one source box, exactly as build_box_map computes them
std::vector<int> box_image(const Game& g, const BoxCover& cover, int box,
                           const BoxMapConfig& cfg, double padding);

}  // namespace gamedyn
