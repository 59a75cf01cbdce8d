#include "gamedyn/morse.h"

#include <algorithm>
#include <queue>

#include "gamedyn/scc.h"

namespace gamedyn {

std::vector<int> MorseDecomposition::sink_ids() const {
  std::vector<int> ids;
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (is_sink[k]) ids.push_back(int(k));
  return ids;
}

MorseDecomposition morse_decomposition(const BoxMapGraph& graph) {
  const auto& adj = graph.adjacency;
  SccResult scc = strongly_connected_components(adj);

  MorseDecomposition morse;
  morse.set_of_box.assign(adj.size(), -1);
  for (const auto& comp : scc.components) {
    bool nontrivial = comp.size() >= 2;
    if (!nontrivial) {
      int b = comp[0];
      nontrivial = std::binary_search(adj[b].begin(), adj[b].end(), b);
    }
    if (!nontrivial) continue;
    int id = int(morse.sets.size());
    for (int b : comp) morse.set_of_box[b] = id;
    morse.sets.push_back(comp);
  }

  morse.is_sink.assign(morse.sets.size(), true);
  for (std::size_t k = 0; k < morse.sets.size(); ++k) {
    bool sink = true;
    for (int b : morse.sets[k]) {
      for (int t : adj[b])
        if (morse.set_of_box[t] != int(k)) {
          sink = false;
          break;
        }
      if (!sink) break;
    }
    morse.is_sink[k] = sink;
  }

  // set-to-set arcs along paths whose interior boxes are all transient
  for (std::size_t k = 0; k < morse.sets.size(); ++k) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<bool> hit(morse.sets.size(), false);
    std::queue<int> frontier;
    for (int b : morse.sets[k]) {
      seen[b] = true;
      frontier.push(b);
    }
    while (!frontier.empty()) {
      int b = frontier.front();
      frontier.pop();
      for (int t : adj[b]) {
        if (seen[t]) continue;
        seen[t] = true;
        int target_set = morse.set_of_box[t];
        if (target_set >= 0 && target_set != int(k)) {
          hit[target_set] = true;
          continue;
        }
        frontier.push(t);
      }
    }
    for (std::size_t l = 0; l < morse.sets.size(); ++l)
      if (hit[l]) morse.arcs.emplace_back(int(k), int(l));
  }
  std::sort(morse.arcs.begin(), morse.arcs.end());
  return morse;
}

}  // namespace gamedyn
