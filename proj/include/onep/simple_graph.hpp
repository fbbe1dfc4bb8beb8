#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "onep/ids.hpp"

namespace onep {

// Undirected simple graph with sorted adjacency lists.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edges_; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    bool adjacent(VertexId u, VertexId v) const;
    bool is_complete() const { return 2 * edges_ == order() * (order() - 1); }

    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

    // Subgraph on the vertices with keep[v] set, relabelled densely in id order.
    SimpleGraph induced(const std::vector<char>& keep) const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edges_ = 0;
};

bool is_connected(const SimpleGraph& g);
// Number of connected components after deleting the vertices with removed[v] set.
std::size_t count_components(const SimpleGraph& g, const std::vector<char>& removed);

}  // namespace onep
