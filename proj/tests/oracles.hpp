#pragma once

// Brute-force reference implementations used only by the tests. They share no code
// with the library's search routines beyond the drawing primitives and validate().

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/interchange.hpp"
#include "onep/one_plane_graph.hpp"
#include "onep/operations.hpp"
#include "onep/simple_graph.hpp"

namespace onep::oracle {

// Every drawing obtained from g by adding one edge u-v, for every nonadjacent pair,
// through every face holding both (any pair of corners) and through every pair of faces
// across an uncrossed segment, keeping exactly those that pass validate().
inline std::vector<OnePlaneGraph> all_single_insertions(const OnePlaneGraph& g, bool stop_at_first = false) {
    std::vector<OnePlaneGraph> out;
    const Drawing& base = g.drawing();
    const PlanarMap& map = base.map();
    const FaceSet& faces = g.faces();
    const auto n = static_cast<VertexId>(g.order());
    // Corners of face f at w: the darts of its walk leaving w.
    const auto corners = [&](FaceId f, VertexId w) {
        std::vector<DartId> c;
        for (DartId d : faces.walks[f]) {
            if (map.origin(d) == w) c.push_back(d);
        }
        return c;
    };
    const auto keep = [&](const Drawing& d) {
        ValidationResult r = validate(d.to_raw());
        if (r.ok()) out.push_back(std::move(*r.graph));
        return stop_at_first && !out.empty();
    };
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            for (FaceId f = 0; f < faces.size(); ++f) {
                for (DartId cu : corners(f, u)) {
                    for (DartId cv : corners(f, v)) {
                        Drawing d = base;
                        d.add_edge(u, cu, v, cv);
                        if (keep(d)) return out;
                    }
                }
            }
            for (SegmentId s = 0; s < map.num_segments(); ++s) {
                if (base.segment(s).half != Half::Whole) continue;
                for (DartId crossed : {2 * s, 2 * s + 1}) {
                    const FaceId left = faces.face_of_dart[crossed];
                    const FaceId right = faces.face_of_dart[twin(crossed)];
                    for (DartId cu : corners(left, u)) {
                        for (DartId cv : corners(right, v)) {
                            Drawing d = base;
                            d.add_crossing_edge(u, cu, crossed, v, cv);
                            if (keep(d)) return out;
                        }
                    }
                }
            }
        }
    }
    return out;
}

inline bool brute_force_maximal(const OnePlaneGraph& g) {
    return all_single_insertions(g, true).empty();
}

// Smallest vertex set whose removal disconnects g, by exhaustive search over subsets
// in increasing size; n-1 for complete graphs.
inline std::size_t cut_set_connectivity(const SimpleGraph& g) {
    const std::size_t n = g.order();
    if (g.is_complete()) return n == 0 ? 0 : n - 1;
    for (std::size_t size = 0; size + 2 <= n; ++size) {
        std::vector<char> removed(n, 0);
        std::fill(removed.end() - static_cast<std::ptrdiff_t>(size), removed.end(), 1);
        do {
            if (count_components(g, removed) > 1) return size;
        } while (std::next_permutation(removed.begin(), removed.end()));
    }
    return n - 1;
}

// Whether some choice of one removed edge per crossing pair leaves every vertex with
// degree 5 or 6; the chosen removals are written to `removed` when found.
inline bool exists_56_regular_skeleton(const OnePlaneGraph& g, std::vector<EdgeId>* removed = nullptr) {
    const std::size_t n = g.order();
    std::vector<std::array<EdgeId, 2>> pairs;
    for (EdgeId e = 0; e < g.size(); ++e) {
        const EdgeId f = g.partner(e);
        if (f != kNone && e < f) pairs.push_back({e, f});
    }
    std::vector<long> deg(n);
    // Removals each vertex can still receive from undecided pairs.
    std::vector<long> open(n, 0);
    for (VertexId v = 0; v < n; ++v) deg[v] = static_cast<long>(g.degree(v));
    for (const auto& p : pairs) {
        for (EdgeId e : p) {
            ++open[g.edge(e).u];
            ++open[g.edge(e).v];
        }
    }
    std::vector<EdgeId> chosen;
    const std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == pairs.size()) return true;
        for (EdgeId e : pairs[i]) {
            for (EdgeId h : pairs[i]) {
                --open[g.edge(h).u];
                --open[g.edge(h).v];
            }
            --deg[g.edge(e).u];
            --deg[g.edge(e).v];
            bool feasible = true;
            for (EdgeId h : pairs[i]) {
                for (VertexId w : {g.edge(h).u, g.edge(h).v}) {
                    // Final degree lies in [deg - open, deg]; it must meet [5, 6].
                    if (deg[w] < 5 || deg[w] - open[w] > 6) feasible = false;
                }
            }
            chosen.push_back(e);
            if (feasible && search(i + 1)) return true;
            chosen.pop_back();
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
            for (EdgeId h : pairs[i]) {
                ++open[g.edge(h).u];
                ++open[g.edge(h).v];
            }
        }
        return false;
    };
    for (VertexId v = 0; v < n; ++v) {
        if (deg[v] < 5 || deg[v] - open[v] > 6) return false;
    }
    const bool found = search(0);
    if (found && removed) *removed = chosen;
    return found;
}

// Explores every drawing reachable from the two plane triangulations on six vertices
// by brute-force insertions, up to `max_edges` edges, and returns the (edges, crossings)
// pairs of those that admit no further insertion. Every maximal drawing on six vertices
// whose planarization is a triangulation has one of these two skeletons, so the result
// lists every attainable (|E|, cr) pair of such drawings up to `max_edges`.
struct SixVertexCensus {
    std::set<std::pair<std::size_t, std::size_t>> maximal;  // (|E|, cr)
    std::size_t states = 0;
};

inline SixVertexCensus maximal_sizes_on_six_vertices(std::size_t max_edges) {
    SixVertexCensus census;
    std::set<std::string> seen;
    const std::function<void(const OnePlaneGraph&)> visit = [&](const OnePlaneGraph& g) {
        if (!seen.insert(serialize_1pg(g)).second) return;
        ++census.states;
        const std::vector<OnePlaneGraph> next = all_single_insertions(g);
        if (next.empty()) census.maximal.insert({g.size(), g.crossing_count()});
        if (g.size() >= max_edges) return;
        for (const OnePlaneGraph& h : next) visit(h);
    };
    const auto plane = [](std::size_t cycle) {
        RawDrawing raw;
        raw.kinds.assign(cycle, VertexKind::True);
        raw.rotation.resize(cycle);
        for (VertexId i = 0; i < cycle; ++i) {
            const auto j = static_cast<VertexId>((i + 1) % cycle);
            raw.edges.push_back({i, j, {}});
        }
        for (VertexId i = 0; i < cycle; ++i) {
            const auto prev = static_cast<EdgeId>((i + cycle - 1) % cycle);
            raw.rotation[i] = {{i, Half::Whole}, {prev, Half::Whole}};
        }
        return Drawing::from_trusted_raw(raw);
    };
    // Octahedron: a 4-cycle with a cone on each side.
    Drawing oct = plane(4);
    k1_triangulate(oct, 0);
    k1_triangulate(oct, 1);
    // Triangular bipyramid with one more cone: degrees 3, 3, 4, 4, 5, 5.
    Drawing stacked = plane(3);
    k1_triangulate(stacked, 0);
    k1_triangulate(stacked, 1);
    k1_triangulate(stacked, 0);
    visit(finalize(oct));
    visit(finalize(stacked));
    return census;
}

}  // namespace onep::oracle
