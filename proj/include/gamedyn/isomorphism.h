#pragma once
#include "gamedyn/response_graph.h"

namespace gamedyn {

// Isomorphism respecting the box structure: per-player strategy relabelings
// plus permutations of players with equal strategy counts. Intended for desk
// sizes (up to 16 nodes or so); the search is brute force.
bool graphs_isomorphic(const ResponseGraph& a, const ResponseGraph& b);

}  // namespace gamedyn
