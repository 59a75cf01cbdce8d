#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gamedyn/box_map.h"
#include "gamedyn/game.h"

namespace gamedyn {

// An explicit chain from one mixed profile to another: flow each point for
// its time, then jump at most epsilon (infinity norm) to the next point.
struct ChainWitness {
  double epsilon = 0.0;
  std::vector<State> points;  // first is the start, last is the goal
  std::vector<double> times;  // one per hop, each >= the requested horizon
  std::vector<double> jumps;  // re-verified jump sizes, each <= epsilon
};

struct WitnessConfig {
  double horizon = 1.0;  // minimum flow time per hop
  double dt = 0.01;
  int random_samples = 8;
  uint64_t seed = 0;
  long long box_budget = 5000000;  // cover size cap; tight epsilon costs boxes
  long long expand_budget = 2000000;  // boxes the search may expand
};

// Searches for an epsilon chain by walking a box map whose grid is fine
// enough that every hop through it jumps at most epsilon. Box images are
// expanded on demand, so only the reachable part of the cover is flowed.
// Returns nothing when the search exhausts the reachable boxes; throws when
// a budget is exceeded (a larger epsilon needs fewer boxes).
std::optional<ChainWitness> epsilon_chain_witness(const Game& g,
                                                  const State& from,
                                                  const State& to,
                                                  double epsilon,
                                                  const WitnessConfig& cfg = {});

std::string witness_json(const Game& g, const ChainWitness& w);

}  // namespace gamedyn
