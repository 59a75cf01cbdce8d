#pragma once
#include <vector>

namespace gamedyn {

// Tarjan over an adjacency list, iterative so deep graphs cannot blow the
// stack. Components come out in reverse topological order of the
// condensation: a component is emitted before everything that reaches it,
// so sinks appear first.
struct SccResult {
  std::vector<int> component_of;            // node -> component id
  std::vector<std::vector<int>> components;  // reverse topological order
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj);

}  // namespace gamedyn
