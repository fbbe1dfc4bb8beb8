#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onep/one_plane_graph.hpp"

namespace onep {

enum class RouteKind : std::uint8_t { OneFace, TwoFaces };

// A way to add the edge u-v (u < v): inside one face, or through two faces that
// share an uncrossed segment, crossing it once.
struct InsertionCandidate {
    VertexId u = kNone;
    VertexId v = kNone;
    RouteKind kind = RouteKind::OneFace;
    FaceId face1 = kNone;        // face holding u's end of the route
    FaceId face2 = kNone;        // TwoFaces: face holding v's end
    DartId crossed = kNone;      // TwoFaces: dart of the crossed segment with face1 on its left
    EdgeId crossed_edge = kNone;

    int delta() const noexcept { return kind == RouteKind::TwoFaces ? 1 : 0; }
    friend bool operator==(const InsertionCandidate&, const InsertionCandidate&) = default;
};

// Every admissible single-edge insertion, ordered by (u, v, kind, face1, face2, crossed edge).
std::vector<InsertionCandidate> insertion_candidates(const OnePlaneGraph& g);

// The drawing with the candidate edge added. The new edge gets the next edge id.
OnePlaneGraph apply_candidate(const OnePlaneGraph& g, const InsertionCandidate& c);

struct MaximalityResult {
    bool maximal = false;
    std::optional<InsertionCandidate> witness;
};

MaximalityResult is_maximal(const OnePlaneGraph& g);

enum class SaturationPolicy { Deterministic, Seeded };

// Adds candidates until none remain: the first in candidate order (Deterministic) or
// a uniformly drawn one (Seeded).
OnePlaneGraph saturate(const OnePlaneGraph& g, SaturationPolicy policy = SaturationPolicy::Deterministic,
                       std::uint64_t seed = 0);

struct RedrawResult {
    int crossings = 0;  // minimum over all re-insertions of the edge, 0 or 1
    // A route in the drawing without the edge; empty when the edge keeps its own
    // uncrossed route or when that drawing is not connected.
    std::optional<InsertionCandidate> route;
};

// Minimum crossings of edge e when it alone is redrawn. Throws UNKNOWN_EDGE.
RedrawResult min_redraw_crossings(const OnePlaneGraph& g, EdgeId e);

struct ImmovabilityResult {
    bool immovable = false;
    EdgeId witness = kNone;  // a crossed edge that can be redrawn without crossings
    std::optional<InsertionCandidate> route;
};

// Throws NOT_MAXIMAL if g is not maximal.
ImmovabilityResult is_immovable(const OnePlaneGraph& g);

// Same, for a drawing already known to be maximal.
ImmovabilityResult is_immovable_unchecked(const OnePlaneGraph& g);

}  // namespace onep
