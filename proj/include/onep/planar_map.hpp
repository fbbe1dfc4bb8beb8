#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "onep/ids.hpp"

namespace onep {

// A rotation system on the sphere. Every segment s owns the darts 2s and 2s+1,
// which are each other's twin; rotation(v) lists the darts leaving v in clockwise
// order. The face to the left of a dart is traced by face_next().
//
// A corner of a face at vertex v is named by the dart c leaving v along that face;
// inserting a new dart "before c" places it inside that corner.
class PlanarMap {
public:
    PlanarMap() = default;

    // Builds a map from explicit rotations. Darts must be numbered 0..2m-1 and each
    // must appear in exactly one rotation list (checked with an assert only; callers
    // that accept untrusted input verify this first).
    PlanarMap(std::vector<VertexKind> kinds, std::vector<std::vector<DartId>> rotations);

    std::size_t num_vertices() const noexcept { return kinds_.size(); }
    std::size_t num_darts() const noexcept { return origin_.size(); }
    std::size_t num_segments() const noexcept { return origin_.size() / 2; }

    VertexKind kind(VertexId v) const { return kinds_[v]; }
    bool is_fake(VertexId v) const { return kinds_[v] == VertexKind::Fake; }
    VertexId origin(DartId d) const { return origin_[d]; }
    VertexId head(DartId d) const { return origin_[twin(d)]; }
    std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }
    std::size_t degree(VertexId v) const { return rotation_[v].size(); }
    std::size_t position(DartId d) const { return position_[d]; }

    DartId next_cw(DartId d) const;
    DartId prev_cw(DartId d) const;
    // Successor of d along the face to its left.
    DartId face_next(DartId d) const { return next_cw(twin(d)); }

    VertexId add_vertex(VertexKind kind);
    // Inserts a vertex with id `at`, shifting every id >= at up by one.
    VertexId insert_vertex(VertexId at, VertexKind kind);

    // Adds a segment a-b. Its dart 2s leaves a and is placed before `corner_a` in the
    // rotation of a (appended when corner_a == kNone); likewise 2s+1 at b.
    SegmentId add_segment(VertexId a, DartId corner_a, VertexId b, DartId corner_b);

    // Splits segment s (a-b) at a new vertex x. Afterwards s is a-x and the returned
    // segment t is x-b; dart 2s+1 leaves x towards a and dart 2t leaves x towards b.
    struct Subdivision {
        VertexId vertex;
        SegmentId tail;
    };
    Subdivision subdivide(SegmentId s, VertexKind kind);

    bool is_connected() const;

private:
    void reindex(VertexId v);

    std::vector<VertexKind> kinds_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<VertexId> origin_;
    std::vector<std::size_t> position_;
};

// Dart sequence of the face to the left of `start`.
std::vector<DartId> face_walk(const PlanarMap& map, DartId start);

}  // namespace onep
