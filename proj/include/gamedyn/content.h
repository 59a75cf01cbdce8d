#pragma once
#include <vector>

#include "gamedyn/game.h"
#include "gamedyn/response_graph.h"

namespace gamedyn {

// The content of a profile set W: all mixed profiles whose support product
// lies inside W. Represented by the maximal subgames (product boxes) fitting
// in W; the content is the union of their faces.
struct ComponentContent {
  std::vector<int> nodes;                  // W, sorted
  std::vector<SubgameSpec> maximal_boxes;  // none strictly contains another
};

ComponentContent content(const ResponseGraph& rg, const std::vector<int>& nodes);

// x belongs to the content iff its support product is inside W
bool content_member(const Game& g, const ComponentContent& c, const State& x,
                    double tol = 0.0);

}  // namespace gamedyn
