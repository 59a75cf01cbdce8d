#include "gamedyn/dot.h"

#include <sstream>

namespace gamedyn {

namespace {

std::string node_id(const ResponseGraph& rg, int v) {
  const auto& counts = rg.strategy_counts();
  int n = int(counts.size());
  std::vector<int> strides(n, 1);
  for (int p = n - 2; p >= 0; --p) strides[p] = strides[p + 1] * counts[p + 1];
  std::string id;
  for (int p = 0; p < n; ++p) {
    if (p) id += '_';
    id += std::to_string((v / strides[p]) % counts[p]);
  }
  return id;
}

}  // namespace

std::string response_graph_dot(const ResponseGraph& rg,
                               const SCCDecomposition& d) {
  std::ostringstream out;
  out << "digraph response_graph {\n";
  int cluster = 0;
  for (int c = 0; c < int(d.components.size()); ++c) {
    if (!d.is_sink[c]) continue;
    out << "  subgraph cluster_" << cluster++ << " {\n    style=filled;\n"
        << "    color=lightgrey;\n";
    for (int v : d.components[c]) out << "    \"" << node_id(rg, v) << "\";\n";
    out << "  }\n";
  }
  for (int v = 0; v < rg.node_count(); ++v) out << "  \"" << node_id(rg, v) << "\";\n";
  for (const Arc& a : rg.arcs())
    out << "  \"" << node_id(rg, a.tail) << "\" -> \"" << node_id(rg, a.head)
        << "\" [label=" << a.player << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gamedyn
