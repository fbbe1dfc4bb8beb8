#include "onep/transform.hpp"

#include <algorithm>
#include <string>

namespace onep {

bool is_triangulation(const FaceSet& faces, const PlanarMap& map) {
    if (faces.size() == 0) return false;
    for (const auto& walk : faces.walks) {
        if (walk.size() != 3) return false;
        const VertexId a = map.origin(walk[0]), b = map.origin(walk[1]), c = map.origin(walk[2]);
        if (a == b || b == c || a == c) return false;
    }
    return true;
}

bool is_triangulation(const PlanarMap& map) { return is_triangulation(trace_faces(map), map); }

SimpleGraph graph_of(const PlanarMap& map) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(map.num_segments());
    for (SegmentId s = 0; s < map.num_segments(); ++s) {
        pairs.emplace_back(map.origin(2 * s), map.origin(2 * s + 1));
    }
    return SimpleGraph(map.num_vertices(), pairs);
}

Planarization planarization(const OnePlaneGraph& g) {
    return {g.map(), is_triangulation(g.faces(), g.map())};
}

namespace {

std::vector<EdgeId> choose_removed(const OnePlaneGraph& g, SkeletonStrategy strategy,
                                   std::span<const EdgeId> explicit_removed) {
    const std::size_t n = g.order();
    const std::size_t cr = g.crossing_count();
    // pair[x - n] = the two edges crossing at fake vertex x, ascending.
    std::vector<std::pair<EdgeId, EdgeId>> pair(cr, {kNone, kNone});
    for (EdgeId e = 0; e < g.size(); ++e) {
        const VertexId x = g.edge(e).crossing;
        if (x == kNone) continue;
        auto& p = pair[x - n];
        if (p.first == kNone) p.first = e; else p.second = e;
    }
    std::vector<EdgeId> removed(cr);
    switch (strategy) {
        case SkeletonStrategy::LexMax:
            for (std::size_t i = 0; i < cr; ++i) removed[i] = pair[i].second;
            break;
        case SkeletonStrategy::LexMin:
            for (std::size_t i = 0; i < cr; ++i) removed[i] = pair[i].first;
            break;
        case SkeletonStrategy::Explicit: {
            std::vector<char> covered(cr, 0);
            for (EdgeId e : explicit_removed) {
                if (e >= g.size() || !g.edge(e).crossed()) {
                    throw Error(ErrorCode::BadExplicitSelection,
                                "edge " + std::to_string(e) + " is not in a crossing pair");
                }
                const std::size_t i = g.edge(e).crossing - n;
                if (covered[i]) {
                    throw Error(ErrorCode::BadExplicitSelection,
                                "two edges selected for crossing " + std::to_string(i + n));
                }
                covered[i] = 1;
                removed[i] = e;
            }
            for (std::size_t i = 0; i < cr; ++i) {
                if (!covered[i]) {
                    throw Error(ErrorCode::BadExplicitSelection,
                                "crossing " + std::to_string(i + n) + " has no selected edge");
                }
            }
            break;
        }
    }
    return removed;
}

}  // namespace

Skeleton skeleton(const OnePlaneGraph& g, SkeletonStrategy strategy,
                  std::span<const EdgeId> explicit_removed) {
    const Drawing& d = g.drawing();
    const PlanarMap& gx = g.map();
    Skeleton sk;
    sk.removed = choose_removed(g, strategy, explicit_removed);

    std::vector<char> gone(g.size(), 0);
    for (EdgeId e : sk.removed) gone[e] = 1;
    std::vector<SegmentId> seg_of_edge(g.size(), kNone);
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (gone[e]) continue;
        seg_of_edge[e] = static_cast<SegmentId>(sk.source_edge.size());
        sk.source_edge.push_back(e);
    }

    const std::size_t n = g.order();
    std::vector<std::vector<DartId>> rotation(n);
    for (VertexId v = 0; v < n; ++v) {
        for (DartId dart : gx.rotation(v)) {
            const EdgeId e = d.edge_of_dart(dart);
            if (gone[e]) continue;
            const SegmentId s = seg_of_edge[e];
            rotation[v].push_back(g.edge(e).u == v ? 2 * s : 2 * s + 1);
        }
    }
    sk.map = PlanarMap(std::vector<VertexKind>(n, VertexKind::True), std::move(rotation));
    sk.faces = trace_faces(sk.map);

    // Source planarization darts lying along a skeleton dart, on the same side.
    auto route = [&](DartId sd) {
        const EdgeId e = sk.source_edge[segment_of(sd)];
        const VertexId w = sk.map.origin(sd);
        const DartId first = d.dart_from(e, w);
        std::vector<DartId> out{first};
        if (g.edge(e).crossed()) {
            const DartId in = twin(first);
            const auto rot = gx.rotation(gx.origin(in));
            out.push_back(rot[(gx.position(in) + 2) % rot.size()]);
        }
        return out;
    };

    sk.constituents.resize(sk.faces.size());
    for (FaceId f = 0; f < sk.faces.size(); ++f) {
        auto& parts = sk.constituents[f];
        for (DartId sd : sk.faces.walks[f]) {
            for (DartId pd : route(sd)) parts.push_back(g.faces().face_of_dart[pd]);
        }
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        const bool blue = std::any_of(parts.begin(), parts.end(), [&](FaceId pf) {
            return g.faces().kind[pf] == FaceKind::True;
        });
        sk.faces.kind[f] = blue ? FaceKind::Blue : FaceKind::Red;
    }
    return sk;
}

std::size_t DualMap::count(FaceKind k) const {
    return static_cast<std::size_t>(std::count(color.begin(), color.end(), k));
}

bool DualMap::is_regular(std::size_t d) const {
    return std::all_of(adjacency.begin(), adjacency.end(),
                       [d](const auto& a) { return a.size() == d; });
}

DualMap dual(const Skeleton& s) {
    DualMap dm;
    dm.color = s.faces.kind;
    dm.adjacency.resize(s.faces.size());
    for (SegmentId seg = 0; seg < s.map.num_segments(); ++seg) {
        const FaceId a = s.faces.face_of_dart[2 * seg];
        const FaceId b = s.faces.face_of_dart[2 * seg + 1];
        dm.edges.emplace_back(a, b);
        dm.adjacency[a].push_back(b);
        dm.adjacency[b].push_back(a);
    }
    for (auto& adj : dm.adjacency) std::sort(adj.begin(), adj.end());
    return dm;
}

}  // namespace onep
