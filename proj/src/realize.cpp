#include "gamedyn/realize.h"

#include <stdexcept>

namespace gamedyn {

std::optional<Game> realize_graph(const ResponseGraph& target, GameClass cls,
                                  int attempts, uint64_t seed) {
  const auto& shape = target.strategy_counts();
  for (int c : shape)
    if (c > 4) throw std::invalid_argument("realize_graph handles up to 4 strategies per player");
  for (int k = 0; k < attempts; ++k) {
    Game g = random_game(shape, seed + uint64_t(k), cls);
    if (!is_strict(g)) continue;
    ResponseGraph rg = build_response_graph(g);
    if (graphs_isomorphic(target, rg)) return g;
  }
  return std::nullopt;
}

SinkSubgameReport check_2xn_sink_subgames(int n, int count, uint64_t seed) {
  if (n < 1 || n > 6) throw std::invalid_argument("check_2xn_sink_subgames handles n up to 6");
  SinkSubgameReport report;
  uint64_t draw = 0;
  for (int i = 0; i < count; ++i) {
    Game g = random_strict_game({2, n}, seed + draw++, GameClass::uniform);
    // the subgame property needs the full hypothesis: a dominated strategy
    // can sit inside a sink component and break the product structure
    while (iterated_strict_dominance(g).sets != full_subgame(g).sets)
      g = random_strict_game({2, n}, seed + draw++, GameClass::uniform);
    ResponseGraph rg = build_response_graph(g);
    SCCDecomposition d = scc_decomposition(rg);
    ++report.games_checked;
    for (int c = 0; c < int(d.components.size()); ++c) {
      if (!d.is_sink[c]) continue;
      if (!component_is_subgame(rg, d.components[c])) {
        ++report.violations;
        report.counterexamples.push_back(g);
        break;
      }
    }
  }
  return report;
}

}  // namespace gamedyn
