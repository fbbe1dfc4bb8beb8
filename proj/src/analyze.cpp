#include "onep/analyze.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace onep {

DegreeProfile degree_profile(const SimpleGraph& g) {
    DegreeProfile p;
    const std::size_t n = g.order();
    if (n == 0) return p;
    p.min_degree = g.degree(0);
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (p.histogram.size() <= d) p.histogram.resize(d + 1, 0);
        ++p.histogram[d];
        p.min_degree = std::min(p.min_degree, d);
        if (d == 2) ++p.lambda1;
        if (d == 4) ++p.lambda2;
        if (d % 2 == 1) {
            bool counts = d <= 9;
            if (!counts && n >= 4) {
                std::vector<char> keep(n, 1);
                keep[v] = 0;
                const SimpleGraph rest = g.induced(keep);
                counts = is_connected(rest) && vertex_connectivity(rest) >= 2;
            }
            if (counts) ++p.lambda3;
        }
    }
    return p;
}

bool is_separating_cycle(const PlanarMap& map, std::span<const VertexId> s) {
    std::vector<VertexId> set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const std::size_t n = map.num_vertices();
    if (set.size() < 3 || set.back() >= n) return false;

    const SimpleGraph g = graph_of(map);
    std::vector<char> in(n, 0);
    for (VertexId v : set) in[v] = 1;
    const SimpleGraph cyc = g.induced(in);
    for (VertexId v = 0; v < cyc.order(); ++v) {
        if (cyc.degree(v) != 2) return false;
    }
    if (!is_connected(cyc)) return false;
    return count_components(g, in) >= 2;
}

RegularityReport regularity_checks(const PlanarMap& tri) {
    if (!is_triangulation(tri)) throw Error(ErrorCode::NotTriangulation, "map has a non-triangular face");
    const SimpleGraph g = graph_of(tri);
    const DegreeProfile p = degree_profile(g);
    RegularityReport r;
    r.is_56_regular = p.omega(5) + p.omega(6) == g.order();
    r.hakimi_applicable = p.min_degree >= 4;
    r.hakimi_value = 7 * p.omega(4) / 3 + p.omega(5);
    r.hakimi_condition = r.hakimi_applicable && r.hakimi_value < 14;
    if (r.is_56_regular) r.implied_connectivity = 5;
    if (r.hakimi_condition) r.implied_connectivity = std::max(r.implied_connectivity, p.min_degree);
    r.connectivity = vertex_connectivity(g);
    r.consistent = r.connectivity >= r.implied_connectivity;
    return r;
}

NearOptimalReport is_near_optimal(const OnePlaneGraph& g) {
    NearOptimalReport rep;
    const Drawing& d = g.drawing();
    const PlanarMap& gx = g.map();
    const FaceSet& gf = g.faces();
    const std::size_t n = g.order();

    // Plane map H of the uncrossed edges, darts numbered like the planarization's.
    std::vector<std::vector<DartId>> rot(n);
    for (VertexId v = 0; v < n; ++v) {
        for (DartId dart : gx.rotation(v)) {
            if (!d.edge(d.edge_of_dart(dart)).crossed()) rot[v].push_back(dart);
        }
    }
    // Renumber the surviving darts densely.
    std::vector<DartId> dense(gx.num_darts(), kNone);
    std::vector<DartId> back;
    for (SegmentId s = 0; s < gx.num_segments(); ++s) {
        if (d.segment(s).half != Half::Whole) continue;
        dense[2 * s] = static_cast<DartId>(back.size());
        back.push_back(2 * s);
        dense[2 * s + 1] = static_cast<DartId>(back.size());
        back.push_back(2 * s + 1);
    }
    for (auto& r : rot) {
        for (auto& dart : r) dart = dense[dart];
    }
    const PlanarMap h(std::vector<VertexKind>(n, VertexKind::True), std::move(rot));
    if (!h.is_connected()) {
        rep.violations.push_back("the subgraph of uncrossed edges is disconnected");
        return rep;
    }
    const FaceSet hf = trace_faces(h);

    // Planarization faces glued across segments of crossed edges form the H faces.
    std::vector<FaceId> parent(gf.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](FaceId f) {
        while (parent[f] != f) f = parent[f] = parent[parent[f]];
        return f;
    };
    for (SegmentId s = 0; s < gx.num_segments(); ++s) {
        if (d.segment(s).half == Half::Whole) continue;
        parent[find(gf.face_of_dart[2 * s])] = find(gf.face_of_dart[2 * s + 1]);
    }
    std::vector<FaceId> region(hf.size());
    for (FaceId f = 0; f < hf.size(); ++f) region[f] = find(gf.face_of_dart[back[hf.walks[f][0]]]);
    std::vector<std::vector<VertexId>> crossings_in(gf.size());
    for (VertexId x = static_cast<VertexId>(n); x < gx.num_vertices(); ++x) {
        crossings_in[find(gf.face_of_dart[gx.rotation(x)[0]])].push_back(x);
    }

    std::vector<char> triangle(hf.size(), 0);
    for (FaceId f = 0; f < hf.size(); ++f) {
        const auto& walk = hf.walks[f];
        const std::string name = "face " + std::to_string(f);
        if (walk.size() != 3 && walk.size() != 4) {
            rep.violations.push_back("(i) " + name + " has length " + std::to_string(walk.size()));
            continue;
        }
        if (hf.boundary[f].size() != walk.size()) {
            rep.violations.push_back("(i) " + name + " has a repeated vertex");
            continue;
        }
        const auto& inside = crossings_in[region[f]];
        if (walk.size() == 3) {
            triangle[f] = 1;
            continue;
        }
        VertexId c[4];
        for (int i = 0; i < 4; ++i) c[i] = h.origin(walk[static_cast<std::size_t>(i)]);
        bool ok = inside.size() == 1;
        if (ok) {
            std::set<std::pair<VertexId, VertexId>> want{{std::min(c[0], c[2]), std::max(c[0], c[2])},
                                                         {std::min(c[1], c[3]), std::max(c[1], c[3])}};
            std::set<std::pair<VertexId, VertexId>> got;
            for (const auto& e : g.drawing().edges()) {
                if (e.crossing == inside[0]) got.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
            }
            ok = got == want;
        }
        if (!ok) {
            rep.violations.push_back("(ii) quadrangular " + name + " holds " +
                                     std::to_string(inside.size()) +
                                     " crossings instead of its two crossing diagonals");
        }
    }
    for (SegmentId s = 0; s < h.num_segments(); ++s) {
        const FaceId a = hf.face_of_dart[2 * s];
        const FaceId b = hf.face_of_dart[2 * s + 1];
        if (triangle[a] && triangle[b]) {
            rep.violations.push_back("(iii) edge " + std::to_string(h.origin(2 * s)) + "-" +
                                     std::to_string(h.origin(2 * s + 1)) + " lies on two triangles");
        }
    }
    rep.near_optimal = rep.violations.empty();
    return rep;
}

std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

bool in_class(const Membership& m, std::size_t k) {
    if (!m.maximal || m.connectivity < k) return false;
    return k != 3 || m.immovable.value_or(false);
}

namespace {

LemmaCheck not_applicable(std::string why) { return {CheckStatus::NotApplicable, std::move(why)}; }
LemmaCheck fail(std::string why) { return {CheckStatus::Fail, std::move(why)}; }
LemmaCheck pass() { return {CheckStatus::Pass, {}}; }

std::string v2s(VertexId v) { return std::to_string(v); }

// Preconditions shared by the true-face adjacency statements.
std::optional<LemmaCheck> face_bound_preconditions(const OnePlaneGraph& g, const Membership& m,
                                                   std::size_t k) {
    if (k < 3 || k > 5) return not_applicable("k must lie in [3,5]");
    if (!in_class(m, k)) {
        return not_applicable(k == 3 ? "requires a 3-connected immovable maximal drawing"
                                     : "requires a " + std::to_string(k) + "-connected maximal drawing");
    }
    if (g.order() < 5 || (k >= 4 && g.order() < 6)) return not_applicable("too few vertices");
    return std::nullopt;
}

}  // namespace

LemmaCheck check_lemma3(const OnePlaneGraph& g, const Membership& m) {
    if (!m.maximal) return not_applicable("requires a maximal drawing");
    const FaceSet& fs = g.faces();
    for (FaceId f = 0; f < fs.size(); ++f) {
        const auto& b = fs.boundary[f];
        if (b.size() < 2) return fail("face " + std::to_string(f) + " has fewer than two vertices");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] >= g.order()) continue;
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (b[j] >= g.order()) continue;
                if (!g.adjacent(b[i], b[j])) {
                    return fail("face " + std::to_string(f) + ": " + v2s(b[i]) + " and " + v2s(b[j]) +
                                " are not adjacent");
                }
            }
        }
    }
    return pass();
}

LemmaCheck check_lemma4(const OnePlaneGraph& g, const Membership& m) {
    if (!m.maximal) return not_applicable("requires a maximal drawing");
    for (EdgeId e = 0; e < g.size(); ++e) {
        const EdgeId f = g.partner(e);
        if (f == kNone || f < e) continue;
        const VertexId q[4] = {g.edge(e).u, g.edge(e).v, g.edge(f).u, g.edge(f).v};
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (!g.adjacent(q[i], q[j])) {
                    return fail("crossing edges " + std::to_string(e) + "," + std::to_string(f) + ": " +
                                v2s(q[i]) + " and " + v2s(q[j]) + " are not adjacent");
                }
            }
        }
    }
    return pass();
}

LemmaCheck check_lemma9(const OnePlaneGraph& g, const Membership& m, std::size_t k) {
    if (auto na = face_bound_preconditions(g, m, k)) return *na;
    const FaceSet& fs = g.faces();
    for (FaceId f = 0; f < fs.size(); ++f) {
        if (fs.kind[f] != FaceKind::True) continue;
        std::set<FaceId> nb;
        for (DartId dart : fs.walks[f]) {
            const FaceId o = fs.face_of_dart[twin(dart)];
            if (o != f && fs.kind[o] == FaceKind::True) nb.insert(o);
        }
        if (nb.size() > 5 - k) {
            return fail("true face " + std::to_string(f) + " is adjacent to " +
                        std::to_string(nb.size()) + " true faces");
        }
    }
    return pass();
}

LemmaCheck check_cor10(const DualMap& dual, const OnePlaneGraph& g, const Membership& m,
                       std::size_t k) {
    if (auto na = face_bound_preconditions(g, m, k)) return *na;
    for (FaceId f = 0; f < dual.order(); ++f) {
        if (dual.color[f] != FaceKind::Blue) continue;
        std::set<FaceId> nb;
        for (FaceId o : dual.adjacency[f]) {
            if (o != f && dual.color[o] == FaceKind::Blue) nb.insert(o);
        }
        if (nb.size() > 5 - k) {
            return fail("blue vertex " + std::to_string(f) + " has " + std::to_string(nb.size()) +
                        " blue neighbours");
        }
    }
    return pass();
}

LemmaCheck check_lemma11(const OnePlaneGraph& g, const Membership& m) {
    if (!m.maximal || m.connectivity < 5) return not_applicable("requires a 5-connected maximal drawing");
    for (VertexId v = 0; v < g.order(); ++v) {
        const std::size_t deg = g.degree(v);
        const std::size_t c = g.crossed_degree(v);
        if (c < (deg + 2) / 3 || c > deg / 2) {
            return fail("vertex " + v2s(v) + ": degree " + std::to_string(deg) + ", crossed " +
                        std::to_string(c));
        }
    }
    return pass();
}

}  // namespace onep
