#include "onep/one_plane_graph.hpp"

#include <utility>

namespace onep {

OnePlaneGraph::OnePlaneGraph(Drawing d) : drawing_(std::move(d)) {
    faces_ = trace_faces(drawing_.map());
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(drawing_.num_edges());
    for (const auto& e : drawing_.edges()) pairs.emplace_back(e.u, e.v);
    underlying_ = SimpleGraph(drawing_.num_true(), pairs);

    partner_.assign(drawing_.num_edges(), kNone);
    std::vector<EdgeId> first(drawing_.num_vertices(), kNone);
    for (EdgeId e = 0; e < drawing_.num_edges(); ++e) {
        const VertexId x = drawing_.edge(e).crossing;
        if (x == kNone) continue;
        if (first[x] == kNone) {
            first[x] = e;
        } else {
            partner_[e] = first[x];
            partner_[first[x]] = e;
        }
    }
}

void OnePlaneGraph::check_vertex(VertexId v) const {
    if (v >= order()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

std::size_t OnePlaneGraph::degree(VertexId v) const {
    check_vertex(v);
    return map().degree(v);
}

std::size_t OnePlaneGraph::crossed_degree(VertexId v) const {
    check_vertex(v);
    std::size_t c = 0;
    for (DartId d : map().rotation(v)) {
        if (drawing_.edge(drawing_.edge_of_dart(d)).crossed()) ++c;
    }
    return c;
}

bool OnePlaneGraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return underlying_.adjacent(u, v);
}

const EdgeRecord& OnePlaneGraph::edge(EdgeId e) const {
    if (e >= size()) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
    return drawing_.edge(e);
}

EdgeId OnePlaneGraph::partner(EdgeId e) const {
    if (e >= size()) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
    return partner_[e];
}

std::vector<EdgeId> OnePlaneGraph::incident_edges(VertexId v) const {
    check_vertex(v);
    std::vector<EdgeId> out;
    for (DartId d : map().rotation(v)) out.push_back(drawing_.edge_of_dart(d));
    return out;
}

}  // namespace onep
