#pragma once

#include <string>

#include "onep/one_plane_graph.hpp"

namespace onep {

// Graphviz rendering of the planarization: one node per true or fake vertex, one edge
// per segment. Fake vertices are small red points labelled with the two edges that
// cross there; segments of crossed edges are dashed.
std::string to_dot(const OnePlaneGraph& g);

}  // namespace onep
