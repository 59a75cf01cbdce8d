#pragma once
#include <cstdint>
#include <optional>

#include "gamedyn/isomorphism.h"
#include "gamedyn/random_game.h"
#include "gamedyn/response_graph.h"

namespace gamedyn {

// Random search for a game of the given class whose response graph is
// isomorphic to `target`. Attempt k uses seed + k, so runs are reproducible
// and shardable. Empty when the budget runs out.
std::optional<Game> realize_graph(const ResponseGraph& target, GameClass cls,
                                  int attempts = 10000, uint64_t seed = 0);

struct SinkSubgameReport {
  int games_checked = 0;
  int violations = 0;
  std::vector<Game> counterexamples;
};

// Draws `count` random strict 2xn games without strictly dominated pure
// strategies and checks that every sink component of the response graph is a
// subgame. Violations are collected, not thrown. The no-dominance filter is
// essential: with a dominated strategy present, a sink component can pass
// through it and fail to be a product (see the unit tests for an example).
SinkSubgameReport check_2xn_sink_subgames(int n, int count, uint64_t seed);

}  // namespace gamedyn
