#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/error.hpp"
#include "onep/faces.hpp"
#include "onep/simple_graph.hpp"

namespace onep {

// A validated 1-plane drawing. Immutable; obtain one through validate() or finalize().
class OnePlaneGraph {
public:
    const Drawing& drawing() const noexcept { return drawing_; }
    const PlanarMap& map() const noexcept { return drawing_.map(); }
    const FaceSet& faces() const noexcept { return faces_; }
    const SimpleGraph& underlying() const noexcept { return underlying_; }
    RawDrawing raw() const { return drawing_.to_raw(); }

    std::size_t order() const noexcept { return drawing_.num_true(); }
    std::size_t size() const noexcept { return drawing_.num_edges(); }
    std::size_t crossing_count() const noexcept { return drawing_.num_fake(); }
    std::size_t degree(VertexId v) const;
    // c_G(v): incident edges that carry a crossing.
    std::size_t crossed_degree(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    const EdgeRecord& edge(EdgeId e) const;
    // The edge crossing e, or kNone.
    EdgeId partner(EdgeId e) const;
    // Edges incident to v, in rotation order.
    std::vector<EdgeId> incident_edges(VertexId v) const;

    friend bool operator==(const OnePlaneGraph& a, const OnePlaneGraph& b) {
        return a.raw() == b.raw();
    }

private:
    friend struct ValidationResult validate(const RawDrawing& raw);
    explicit OnePlaneGraph(Drawing d);

    void check_vertex(VertexId v) const;

    Drawing drawing_;
    FaceSet faces_;
    SimpleGraph underlying_;
    std::vector<EdgeId> partner_;
};

struct Violation {
    ErrorCode code;
    std::string detail;
};

struct ValidationResult {
    std::optional<OnePlaneGraph> graph;
    std::vector<Violation> violations;

    bool ok() const noexcept { return graph.has_value(); }
    // One line per violation, "CODE: detail".
    std::string report() const;
};

// Checks every structural, planarity and 1-planarity invariant and reports all
// violations found.
ValidationResult validate(const RawDrawing& raw);

// Validates or throws ValidationFailed carrying the violation report.
OnePlaneGraph finalize(const RawDrawing& raw);
OnePlaneGraph finalize(const Drawing& d);

}  // namespace onep
