#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "onep/faces.hpp"
#include "onep/one_plane_graph.hpp"
#include "onep/simple_graph.hpp"

namespace onep {

// True iff every face walk has length 3 and visits 3 distinct vertices.
bool is_triangulation(const PlanarMap& map);
bool is_triangulation(const FaceSet& faces, const PlanarMap& map);

// Graph on all vertices of the map with one edge per segment (parallel segments merged).
SimpleGraph graph_of(const PlanarMap& map);

struct Planarization {
    PlanarMap map;  // fake vertices keep their FAKE kind
    bool triangulation = false;
};

Planarization planarization(const OnePlaneGraph& g);

enum class SkeletonStrategy { LexMax, LexMin, Explicit };

struct Skeleton {
    PlanarMap map;                  // vertices are the true vertices of the source
    std::vector<EdgeId> source_edge;  // skeleton segment -> kept source edge
    std::vector<EdgeId> removed;    // one per crossing, in fake-vertex order
    FaceSet faces;                  // kinds are Blue / Red
    // For each skeleton face, the source planarization faces it is made of
    // (a single TRUE face for blue faces, the merged FAKE faces for red ones).
    std::vector<std::vector<FaceId>> constituents;

    std::size_t order() const noexcept { return map.num_vertices(); }
    std::size_t size() const noexcept { return map.num_segments(); }
    SimpleGraph graph() const { return graph_of(map); }
};

// Removes one edge of each crossing pair. LexMax drops the larger edge id, LexMin the
// smaller; Explicit drops exactly the listed edges (BAD_EXPLICIT_SELECTION unless the
// list holds one edge of every crossing pair and nothing else).
Skeleton skeleton(const OnePlaneGraph& g, SkeletonStrategy strategy = SkeletonStrategy::LexMax,
                  std::span<const EdgeId> explicit_removed = {});

// Dual of a skeleton: one vertex per face, one edge per skeleton segment.
struct DualMap {
    std::vector<FaceKind> color;
    std::vector<std::pair<FaceId, FaceId>> edges;
    std::vector<std::vector<FaceId>> adjacency;  // with multiplicity; a loop appears twice

    std::size_t order() const noexcept { return color.size(); }
    std::size_t size() const noexcept { return edges.size(); }
    std::size_t degree(FaceId f) const { return adjacency[f].size(); }
    std::size_t count(FaceKind k) const;
    bool is_regular(std::size_t d) const;
};

DualMap dual(const Skeleton& s);

}  // namespace onep
