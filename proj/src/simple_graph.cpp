#include "onep/simple_graph.hpp"

#include <algorithm>
#include <cassert>

namespace onep {

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges)
    : adj_(n) {
    for (const auto& [u, v] : edges) {
        assert(u < n && v < n && u != v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        edges_ += a.size();
    }
    edges_ /= 2;
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<char>& keep) const {
    std::vector<VertexId> index(order(), kNone);
    VertexId next = 0;
    for (VertexId v = 0; v < order(); ++v) {
        if (keep[v]) index[v] = next++;
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : edge_list()) {
        if (keep[u] && keep[v]) edges.emplace_back(index[u], index[v]);
    }
    return SimpleGraph(next, edges);
}

std::size_t count_components(const SimpleGraph& g, const std::vector<char>& removed) {
    std::vector<char> seen(removed);
    std::size_t components = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const SimpleGraph& g) {
    return count_components(g, std::vector<char>(g.order(), 0)) <= 1;
}

}  // namespace onep
