#include "gamedyn/scc.h"

#include <algorithm>

namespace gamedyn {

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
  int n = int(adj.size());
  SccResult res;
  res.component_of.assign(n, -1);

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  // explicit DFS frames: node and position in its adjacency list
  std::vector<std::pair<int, std::size_t>> frames;
  int counter = 0;

  for (int start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    frames.emplace_back(start, 0);
    index[start] = lowlink[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        int w = adj[v][pos++];
        if (index[w] < 0) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        int v_done = v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().first] =
              std::min(lowlink[frames.back().first], lowlink[v_done]);
        if (lowlink[v_done] == index[v_done]) {
          std::vector<int> comp;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.component_of[w] = int(res.components.size());
            comp.push_back(w);
            if (w == v_done) break;
          }
          std::sort(comp.begin(), comp.end());
          res.components.push_back(std::move(comp));
        }
      }
    }
  }
  return res;
}

}  // namespace gamedyn
