#include "onep/maximality.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace onep {

namespace {

auto order_key(const InsertionCandidate& c) {
    return std::tuple(c.u, c.v, c.kind, c.face1, c.face2, c.crossed_edge);
}

// True vertices of a sorted boundary.
std::vector<VertexId> true_part(const std::vector<VertexId>& boundary, std::size_t n) {
    std::vector<VertexId> out;
    for (VertexId v : boundary) {
        if (v < n) out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<InsertionCandidate> insertion_candidates(const OnePlaneGraph& g) {
    const FaceSet& fs = g.faces();
    const PlanarMap& map = g.map();
    const Drawing& d = g.drawing();
    const std::size_t n = g.order();
    std::vector<InsertionCandidate> out;

    for (FaceId f = 0; f < fs.size(); ++f) {
        const auto b = true_part(fs.boundary[f], n);
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (!g.underlying().adjacent(b[i], b[j])) {
                    out.push_back({b[i], b[j], RouteKind::OneFace, f, kNone, kNone, kNone});
                }
            }
        }
    }

    for (SegmentId s = 0; s < map.num_segments(); ++s) {
        if (d.segment(s).half != Half::Whole) continue;
        const FaceId f1 = fs.face_of_dart[2 * s];
        const FaceId f2 = fs.face_of_dart[2 * s + 1];
        if (f1 == f2) continue;
        const auto b1 = true_part(fs.boundary[f1], n);
        const auto b2 = true_part(fs.boundary[f2], n);
        for (VertexId x : b1) {
            if (fs.on_boundary(f2, x)) continue;
            for (VertexId y : b2) {
                if (fs.on_boundary(f1, y) || g.underlying().adjacent(x, y)) continue;
                const EdgeId e = d.segment(s).edge;
                if (x < y) {
                    out.push_back({x, y, RouteKind::TwoFaces, f1, f2, 2 * s, e});
                } else {
                    out.push_back({y, x, RouteKind::TwoFaces, f2, f1, 2 * s + 1, e});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return order_key(a) < order_key(b); });
    return out;
}

OnePlaneGraph apply_candidate(const OnePlaneGraph& g, const InsertionCandidate& c) {
    Drawing d = g.drawing();
    const PlanarMap& map = g.map();
    const auto& walks = g.faces().walks;
    const DartId cu = corner_in_walk(map, walks[c.face1], c.u);
    if (c.kind == RouteKind::OneFace) {
        const DartId cv = corner_in_walk(map, walks[c.face1], c.v);
        d.add_edge(c.u, cu, c.v, cv);
    } else {
        const DartId cv = corner_in_walk(map, walks[c.face2], c.v);
        d.add_crossing_edge(c.u, cu, c.crossed, c.v, cv);
    }
    return finalize(d);
}

MaximalityResult is_maximal(const OnePlaneGraph& g) {
    auto cands = insertion_candidates(g);
    if (cands.empty()) return {true, std::nullopt};
    return {false, cands.front()};
}

OnePlaneGraph saturate(const OnePlaneGraph& g, SaturationPolicy policy, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OnePlaneGraph cur = g;
    for (;;) {
        const auto cands = insertion_candidates(cur);
        if (cands.empty()) return cur;
        std::size_t pick = 0;
        if (policy == SaturationPolicy::Seeded) {
            pick = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng);
        }
        cur = apply_candidate(cur, cands[pick]);
    }
}

RedrawResult min_redraw_crossings(const OnePlaneGraph& g, EdgeId e) {
    const EdgeRecord rec = g.edge(e);
    if (!rec.crossed()) return {0, std::nullopt};
    // A crossed edge whose endpoint has no other edge leaves that endpoint inside the
    // merged region around the removed route, which also reaches the other endpoint.
    if (g.degree(rec.u) == 1 || g.degree(rec.v) == 1) return {0, std::nullopt};

    const ValidationResult r = validate(remove_edge(g.raw(), e));
    // If the removal disconnects the planarization, both endpoints border the region
    // left by the route, which then touches every component.
    if (!r.ok()) return {0, std::nullopt};
    const OnePlaneGraph& h = *r.graph;
    const VertexId u = std::min(rec.u, rec.v);
    const VertexId v = std::max(rec.u, rec.v);
    const FaceSet& fs = h.faces();
    for (FaceId f = 0; f < fs.size(); ++f) {
        if (fs.on_boundary(f, u) && fs.on_boundary(f, v)) {
            return {0, InsertionCandidate{u, v, RouteKind::OneFace, f, kNone, kNone, kNone}};
        }
    }
    for (const auto& c : insertion_candidates(h)) {
        if (c.u == u && c.v == v && c.kind == RouteKind::TwoFaces) return {1, c};
    }
    return {1, std::nullopt};
}

ImmovabilityResult is_immovable_unchecked(const OnePlaneGraph& g) {
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (!g.edge(e).crossed()) continue;
        RedrawResult r = min_redraw_crossings(g, e);
        if (r.crossings == 0) return {false, e, std::move(r.route)};
    }
    return {true, kNone, std::nullopt};
}

ImmovabilityResult is_immovable(const OnePlaneGraph& g) {
    if (!is_maximal(g).maximal) throw Error(ErrorCode::NotMaximal, "drawing is not maximal");
    return is_immovable_unchecked(g);
}

}  // namespace onep
