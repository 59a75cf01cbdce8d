#pragma once
#include <optional>
#include <vector>

#include "gamedyn/game.h"

namespace gamedyn {

struct Arc {
  int tail, head;
  int player;  // the single player the endpoints differ in
};

// Directed graph on pure profiles: for every pair differing in one player's
// strategy, an arc points at the weakly preferred profile; ties get arcs
// both ways.
class ResponseGraph {
 public:
  ResponseGraph(std::vector<int> strategy_counts, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  const std::vector<int>& strategy_counts() const { return counts_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }
  std::vector<std::vector<int>> adjacency() const;  // node -> successor nodes
  bool has_arc(int tail, int head) const;

 private:
  std::vector<int> counts_;
  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;  // arc indices per tail
};

ResponseGraph build_response_graph(const Game& g);

struct SCCDecomposition {
  std::vector<int> component_of;
  std::vector<std::vector<int>> components;  // reverse topological order
  std::vector<std::pair<int, int>> condensation_arcs;
  std::vector<bool> is_sink;

  std::vector<int> sink_ids() const;
};

SCCDecomposition scc_decomposition(const ResponseGraph& rg);

// no arc leaves the node set
bool is_attracting(const ResponseGraph& rg, const std::vector<int>& nodes);

// when the node set is exactly a product of per-player strategy subsets,
// returns that subgame
std::optional<SubgameSpec> component_is_subgame(const ResponseGraph& rg,
                                                const std::vector<int>& nodes);

// graph sinks; strict games only, where sinks are exactly the pure Nash
// equilibria
std::vector<int> pure_nash(const ResponseGraph& rg, const Game& g);

bool is_dag(const ResponseGraph& rg);

}  // namespace gamedyn
