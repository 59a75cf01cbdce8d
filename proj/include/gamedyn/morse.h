#pragma once
#include <vector>

#include "gamedyn/box_map.h"

namespace gamedyn {

// Nontrivial strongly connected components of a box map (size at least two,
// or a single box with a self arc), ordered sinks first. A set is a sink when
// no arc leaves it, which makes it an approximation of a sink chain
// component of the flow at this resolution.
struct MorseDecomposition {
  std::vector<std::vector<int>> sets;  // sorted box lists
  std::vector<bool> is_sink;
  std::vector<int> set_of_box;         // index into sets, -1 for transient
  std::vector<std::pair<int, int>> arcs;  // reachability between sets

  std::vector<int> sink_ids() const;
};

MorseDecomposition morse_decomposition(const BoxMapGraph& graph);

}  // namespace gamedyn
