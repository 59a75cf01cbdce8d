#include "gamedyn/response_graph.h"

#include <algorithm>
#include <stdexcept>

#include "gamedyn/scc.h"

namespace gamedyn {

ResponseGraph::ResponseGraph(std::vector<int> strategy_counts,
                             std::vector<Arc> arcs)
    : counts_(std::move(strategy_counts)), arcs_(std::move(arcs)) {
  long long prod = 1;
  for (int c : counts_) prod *= c;
  node_count_ = int(prod);
  out_.resize(node_count_);
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    out_[arcs_[i].tail].push_back(int(i));
}

std::vector<std::vector<int>> ResponseGraph::adjacency() const {
  std::vector<std::vector<int>> adj(node_count_);
  for (const Arc& a : arcs_) adj[a.tail].push_back(a.head);
  return adj;
}

bool ResponseGraph::has_arc(int tail, int head) const {
  for (int i : out_[tail])
    if (arcs_[i].head == head) return true;
  return false;
}

ResponseGraph build_response_graph(const Game& g) {
  std::vector<Arc> arcs;
  for (int p = 0; p < g.num_players(); ++p) {
    int c = g.strategy_counts()[p];
    for (int a = 0; a < g.antiprofile_count(p); ++a) {
      for (int s = 0; s < c; ++s) {
        for (int t = s + 1; t < c; ++t) {
          int zs = g.compose(p, a, s);
          int zt = g.compose(p, a, t);
          double us = g.payoff(zs, p);
          double ut = g.payoff(zt, p);
          if (us <= ut) arcs.push_back({zs, zt, p});
          if (ut <= us) arcs.push_back({zt, zs, p});
        }
      }
    }
  }
  return ResponseGraph(g.strategy_counts(), std::move(arcs));
}

SCCDecomposition scc_decomposition(const ResponseGraph& rg) {
  SccResult scc = strongly_connected_components(rg.adjacency());
  SCCDecomposition d;
  d.component_of = std::move(scc.component_of);
  d.components = std::move(scc.components);
  int k = int(d.components.size());
  d.is_sink.assign(k, true);
  for (const Arc& a : rg.arcs()) {
    int cu = d.component_of[a.tail], cv = d.component_of[a.head];
    if (cu != cv) {
      d.condensation_arcs.emplace_back(cu, cv);
      d.is_sink[cu] = false;
    }
  }
  std::sort(d.condensation_arcs.begin(), d.condensation_arcs.end());
  d.condensation_arcs.erase(
      std::unique(d.condensation_arcs.begin(), d.condensation_arcs.end()),
      d.condensation_arcs.end());
  return d;
}

std::vector<int> SCCDecomposition::sink_ids() const {
  std::vector<int> ids;
  for (int i = 0; i < int(is_sink.size()); ++i)
    if (is_sink[i]) ids.push_back(i);
  return ids;
}

bool is_attracting(const ResponseGraph& rg, const std::vector<int>& nodes) {
  std::vector<bool> in(rg.node_count(), false);
  for (int v : nodes) in[v] = true;
  for (const Arc& a : rg.arcs())
    if (in[a.tail] && !in[a.head]) return false;
  return true;
}

std::optional<SubgameSpec> component_is_subgame(const ResponseGraph& rg,
                                                const std::vector<int>& nodes) {
  int n = int(rg.strategy_counts().size());
  // decode strategies per node against the graph's shape
  std::vector<int> strides(n, 1);
  for (int p = n - 2; p >= 0; --p)
    strides[p] = strides[p + 1] * rg.strategy_counts()[p + 1];

  SubgameSpec spec;
  spec.sets.resize(n);
  std::vector<std::vector<bool>> seen(n);
  for (int p = 0; p < n; ++p) seen[p].assign(rg.strategy_counts()[p], false);
  for (int v : nodes)
    for (int p = 0; p < n; ++p) {
      int s = (v / strides[p]) % rg.strategy_counts()[p];
      if (!seen[p][s]) {
        seen[p][s] = true;
        spec.sets[p].push_back(s);
      }
    }
  for (int p = 0; p < n; ++p) std::sort(spec.sets[p].begin(), spec.sets[p].end());

  long long prod = 1;
  for (int p = 0; p < n; ++p) prod *= spec.sets[p].size();
  if (prod != (long long)nodes.size()) return std::nullopt;
  // sizes match, so the node set is the product iff it has no duplicates
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;
  return spec;
}

std::vector<int> pure_nash(const ResponseGraph& rg, const Game& g) {
  if (!is_strict(g))
    throw std::invalid_argument("pure_nash requires a strict game");
  std::vector<int> sinks;
  for (int v = 0; v < rg.node_count(); ++v)
    if (rg.out_arcs(v).empty()) sinks.push_back(v);
  return sinks;
}

bool is_dag(const ResponseGraph& rg) {
  SccResult scc = strongly_connected_components(rg.adjacency());
  if (int(scc.components.size()) != rg.node_count()) return false;
  for (const Arc& a : rg.arcs())
    if (a.tail == a.head) return false;
  return true;
}

}  // namespace gamedyn
