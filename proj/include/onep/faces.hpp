#pragma once

#include <cstddef>
#include <vector>

#include "onep/planar_map.hpp"

namespace onep {

// FAKE/TRUE classify faces of a planarization; RED/BLUE classify faces of a skeleton.
enum class FaceKind : std::uint8_t { True, Fake, Blue, Red };

struct FaceSet {
    std::vector<FaceId> face_of_dart;
    std::vector<std::vector<DartId>> walks;
    // Sorted, duplicate-free vertex set of each boundary walk.
    std::vector<std::vector<VertexId>> boundary;
    std::vector<FaceKind> kind;

    std::size_t size() const noexcept { return walks.size(); }
    std::size_t count(FaceKind k) const;
    bool on_boundary(FaceId f, VertexId v) const;
    // Faces whose boundary contains v, ascending.
    std::vector<FaceId> faces_at(VertexId v) const;
};

// Traces every face of `map` (walks start at the lowest unvisited dart, so the result
// is deterministic) and classifies a face FAKE iff it visits a fake vertex.
FaceSet trace_faces(const PlanarMap& map);

}  // namespace onep
