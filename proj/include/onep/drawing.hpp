#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "onep/planar_map.hpp"

namespace onep {

struct EdgeRecord {
    VertexId u = kNone;
    VertexId v = kNone;
    VertexId crossing = kNone;

    bool crossed() const noexcept { return crossing != kNone; }
    VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
    bool has_endpoint(VertexId w) const noexcept { return w == u || w == v; }
};

struct SegmentRef {
    EdgeId edge;
    Half half;
};

// Untrusted, id-level description of a drawing: the shape of the interchange file.
// A dart is named by (edge, half) and the vertex whose rotation lists it.
struct DartRef {
    EdgeId edge;
    Half half;

    friend bool operator==(const DartRef&, const DartRef&) = default;
};

struct RawEdge {
    VertexId u = kNone;
    VertexId v = kNone;
    std::vector<VertexId> crossings;

    friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

struct RawDrawing {
    std::vector<VertexKind> kinds;
    std::vector<std::string> labels;  // empty, or one (possibly empty) label per vertex
    std::vector<RawEdge> edges;
    std::vector<std::vector<DartRef>> rotation;

    friend bool operator==(const RawDrawing&, const RawDrawing&) = default;
};

// Mutable planarization with its edge table. Ids of TRUE vertices always precede
// FAKE ones. Invariants beyond the map structure are established by validate().
class Drawing {
public:
    Drawing() = default;

    // Builds from a raw drawing that already passed the structural checks of validate();
    // true vertices are moved ahead of fake ones (stable) if needed.
    static Drawing from_trusted_raw(const RawDrawing& raw);
    RawDrawing to_raw() const;

    const PlanarMap& map() const noexcept { return map_; }
    std::size_t num_vertices() const noexcept { return map_.num_vertices(); }
    std::size_t num_true() const noexcept { return num_true_; }
    std::size_t num_fake() const noexcept { return map_.num_vertices() - num_true_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::span<const EdgeRecord> edges() const noexcept { return edges_; }
    const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }
    SegmentRef segment(SegmentId s) const { return segments_[s]; }
    EdgeId edge_of_dart(DartId d) const { return segments_[segment_of(d)].edge; }
    // The segment of e for the given half (Whole for uncrossed edges).
    SegmentId segment_of_edge(EdgeId e, Half half) const;
    // Dart of the (first) segment of e leaving endpoint w.
    DartId dart_from(EdgeId e, VertexId w) const;

    bool adjacent(VertexId u, VertexId v) const;
    const std::string& label(VertexId v) const { return labels_[v]; }
    std::span<const std::string> labels() const noexcept { return labels_; }
    void set_label(VertexId v, std::string label) { labels_[v] = std::move(label); }

    VertexId add_true_vertex(std::string label = {});
    // Adds an uncrossed edge u-v drawn through the face shared by the two corners
    // (kNone for a vertex without darts).
    EdgeId add_edge(VertexId u, DartId corner_u, VertexId v, DartId corner_v);
    // Adds an edge u-v that crosses the uncrossed segment of `crossed`. corner_u lies on
    // the face left of `crossed`, corner_v on the face left of twin(crossed).
    EdgeId add_crossing_edge(VertexId u, DartId corner_u, DartId crossed, VertexId v,
                             DartId corner_v);

    // Copy of the drawing without edge e; a crossing on e disappears and the edge it
    // crossed becomes uncrossed.
    Drawing without_edge(EdgeId e) const;

private:
    PlanarMap map_;
    std::size_t num_true_ = 0;
    std::vector<EdgeRecord> edges_;
    std::vector<SegmentRef> segments_;
    std::vector<std::array<SegmentId, 2>> edge_segments_;
    std::vector<std::string> labels_;
};

// Removes edge e from a raw drawing (see Drawing::without_edge).
RawDrawing remove_edge(const RawDrawing& raw, EdgeId e);

// First dart of `walk` leaving v, preferring the earliest position in v's rotation;
// kNone if the walk does not visit v.
DartId corner_in_walk(const PlanarMap& map, std::span<const DartId> walk, VertexId v);

}  // namespace onep
