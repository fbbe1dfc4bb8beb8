#pragma once

#include <cstddef>
#include <vector>

#include "onep/simple_graph.hpp"

namespace onep {

// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t,
// i.e. the size of a minimum s-t vertex separator. Stops early once `limit` paths
// are found.
std::size_t local_connectivity(const SimpleGraph& g, VertexId s, VertexId t,
                               std::size_t limit = static_cast<std::size_t>(-1));

// Minimum s-t vertex separator for nonadjacent s, t (ascending ids).
std::vector<VertexId> minimum_separator(const SimpleGraph& g, VertexId s, VertexId t);

// Exact vertex connectivity; n-1 for complete graphs. Throws DISCONNECTED for a
// disconnected graph with at least two vertices.
std::size_t vertex_connectivity(const SimpleGraph& g);

// A minimum vertex cut (empty for complete graphs).
std::vector<VertexId> minimum_vertex_cut(const SimpleGraph& g);

}  // namespace onep
