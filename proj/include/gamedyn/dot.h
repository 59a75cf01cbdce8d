#pragma once
#include <string>

#include "gamedyn/response_graph.h"

namespace gamedyn {

// Graphviz export. Nodes are strategy indices joined by '_', arcs carry the
// deviating player as label, and each sink component becomes a filled
// cluster.
std::string response_graph_dot(const ResponseGraph& rg,
                               const SCCDecomposition& d);

}  // namespace gamedyn
