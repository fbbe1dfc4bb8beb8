#include "onep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "onep/interchange.hpp"
#include "onep/operations.hpp"

namespace onep {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParameter, what);
}

// Straight-line drawing on a cylinder: a vertex sits at angle `turn` (in full turns)
// and height `radius`. Rotations are read off the drawing, so it must be crossing-free.
class CylinderBuilder {
public:
    VertexId add(double turn, double radius, std::string label) {
        turn_.push_back(turn - std::floor(turn));
        radius_.push_back(radius);
        labels_.push_back(std::move(label));
        return static_cast<VertexId>(turn_.size() - 1);
    }

    void join(VertexId a, VertexId b) { edges_.push_back({a, b, {}}); }

    OnePlaneGraph build() const {
        RawDrawing raw;
        const std::size_t n = turn_.size();
        raw.kinds.assign(n, VertexKind::True);
        raw.labels = labels_;
        raw.edges = edges_;
        std::vector<std::vector<std::pair<double, EdgeId>>> around(n);
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            const VertexId a = edges_[e].u, b = edges_[e].v;
            around[a].emplace_back(direction(a, b), e);
            around[b].emplace_back(direction(b, a), e);
        }
        raw.rotation.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            // Decreasing angle: clockwise.
            std::sort(around[v].begin(), around[v].end(), std::greater<>());
            for (const auto& [angle, e] : around[v]) raw.rotation[v].push_back({e, Half::Whole});
        }
        return finalize(raw);
    }

private:
    double direction(VertexId from, VertexId to) const {
        double dt = turn_[to] - turn_[from];
        dt -= std::round(dt);
        return std::atan2(radius_[to] - radius_[from], dt);
    }

    std::vector<double> turn_;
    std::vector<double> radius_;
    std::vector<std::string> labels_;
    std::vector<RawEdge> edges_;
};

std::string name(char c, int ring, long index) {
    return std::string(1, c) + std::to_string(ring) + "_" + std::to_string(index);
}

// Position of the vertices of H^k and H^k o H^k.
struct Role {
    char copy;  // 'a', 'b' or 'z'
    int ring;
    long index;  // 1-based
};

struct Layout {
    CylinderBuilder builder;
    std::vector<Role> roles;
};

// ids[j][i] for ring j (1..k), index i (1..2^{j+1}); index 0 means 2^{j+1}.
using Rings = std::vector<std::vector<VertexId>>;

Rings add_H(Layout& lay, int k, char copy, bool mirrored) {
    Rings ids(static_cast<std::size_t>(k) + 1);
    long c = 0;  // angular offset of ring j, in units of its own step
    for (int j = 1; j <= k; ++j) {
        const long size = 1L << (j + 1);
        ids[j].assign(static_cast<std::size_t>(size) + 1, kNone);
        const double radius = mirrored ? 2.0 * k + 2 - j : j;
        for (long i = 1; i <= size; ++i) {
            const VertexId v = lay.builder.add(static_cast<double>(i + c) / static_cast<double>(size),
                                               radius, name(copy, j, i));
            lay.roles.push_back({copy, j, i});
            ids[j][static_cast<std::size_t>(i)] = v;
        }
        ids[j][0] = ids[j][static_cast<std::size_t>(size)];
        for (long i = 1; i <= size; ++i) {
            lay.builder.join(ids[j][static_cast<std::size_t>(i)],
                             ids[j][static_cast<std::size_t>(i % size + 1)]);
        }
        c = 2 * c + 1;
    }
    for (int j = 1; j < k; ++j) {
        const long size = 1L << (j + 1);
        const long next = 2 * size;
        for (long i = 1; i <= size; ++i) {
            const VertexId p = ids[j][static_cast<std::size_t>(i)];
            lay.builder.join(p, ids[j + 1][static_cast<std::size_t>((2 * i - 2) % next)]);
            lay.builder.join(p, ids[j + 1][static_cast<std::size_t>((2 * i) % next)]);
        }
    }
    return ids;
}

Layout hh_layout(int k) {
    Layout lay;
    const Rings a = add_H(lay, k, 'a', false);
    const Rings b = add_H(lay, k, 'b', true);
    const long size = 1L << (k + 1);
    long c = 0;
    for (int j = 1; j < k; ++j) c = 2 * c + 1;
    for (long i = 1; i <= size; ++i) {
        const VertexId z = lay.builder.add((static_cast<double>(i + c) + 0.5) / static_cast<double>(size),
                                           k + 1.0, "z_" + std::to_string(i));
        lay.roles.push_back({'z', k + 1, i});
        const auto at = [&](const Rings& r, long idx) { return r[k][static_cast<std::size_t>(idx % size)]; };
        lay.builder.join(z, at(a, i));
        lay.builder.join(z, at(a, i + 1));
        lay.builder.join(z, at(b, i));
        lay.builder.join(z, at(b, i + 1));
    }
    return lay;
}

// Index in the quadrangle walk of the endpoint of the diagonal that is inserted first
// (and so survives as the lower edge id): z-z in the gluing ring, the apex and its
// middle child between two rings, the first ring vertex in a kernel.
std::size_t kept_corner(const std::vector<VertexId>& corners, const std::vector<Role>& roles) {
    auto role = [&](std::size_t i) { return roles[corners[i]]; };
    for (std::size_t i = 0; i < 4; ++i) {
        if (role(i).copy == 'z') return i;
    }
    const int lo = std::min({role(0).ring, role(1).ring, role(2).ring, role(3).ring});
    const int hi = std::max({role(0).ring, role(1).ring, role(2).ring, role(3).ring});
    if (lo != hi) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (role(i).ring == lo) return i;
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (role(i).index < role(best).index) best = i;
    }
    return best;
}

// Quadrangle and triangle faces of a plane graph, as one dart each.
struct FaceDarts {
    std::vector<DartId> triangles;
    std::vector<DartId> quads;
};

FaceDarts face_darts(const OnePlaneGraph& g) {
    FaceDarts fd;
    for (const auto& walk : g.faces().walks) {
        if (walk.size() == 3) fd.triangles.push_back(walk.front());
        if (walk.size() == 4) fd.quads.push_back(walk.front());
    }
    return fd;
}

OnePlaneGraph crossed_hh(int k, bool cone_triangles) {
    require(k >= 1, "k must be at least 1");
    const Layout lay = hh_layout(k);
    const OnePlaneGraph base = lay.builder.build();
    const FaceDarts fd = face_darts(base);
    Drawing d = base.drawing();
    if (cone_triangles) {
        for (DartId t : fd.triangles) {
            const VertexId c = k1_triangulate(d, t);
            d.set_label(c, "c_" + std::to_string(c));
        }
    }
    for (DartId q : fd.quads) {
        const auto walk = face_walk(d.map(), q);
        const auto corners = face_corners(d, q);
        tx_triangulate(d, walk[kept_corner(corners, lay.roles)]);
    }
    return finalize(d);
}

struct MLayout {
    CylinderBuilder builder;
    std::vector<std::vector<VertexId>> u;  // u[j][i], ring j in 1..k, i in 0..3
};

MLayout m_layout(int k) {
    MLayout lay;
    lay.u.assign(static_cast<std::size_t>(k) + 1, std::vector<VertexId>(4, kNone));
    for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < 4; ++i) {
            lay.u[j][i] = lay.builder.add(i / 4.0, j, name('u', j, i));
        }
        for (int i = 0; i < 4; ++i) lay.builder.join(lay.u[j][i], lay.u[j][(i + 1) % 4]);
    }
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < 4; ++i) lay.builder.join(lay.u[j][i], lay.u[j + 1][i]);
    }
    return lay;
}

EdgeId edge_between(const Drawing& d, VertexId a, VertexId b) {
    for (DartId dart : d.map().rotation(a)) {
        const EdgeId e = d.edge_of_dart(dart);
        if (d.edge(e).other(a) == b) return e;
    }
    return kNone;
}

// The dart leaving `from` towards `to` along an uncrossed edge.
DartId dart_towards(const Drawing& d, VertexId from, VertexId to) {
    return d.dart_from(edge_between(d, from, to), from);
}

bool face_has(const Drawing& d, DartId face, VertexId v) {
    const auto c = face_corners(d, face);
    return std::find(c.begin(), c.end(), v) != c.end();
}

// Of the two faces along the edge from-to, a dart of the one that holds `witness`.
DartId side_with(const Drawing& d, VertexId from, VertexId to, VertexId witness) {
    const DartId dart = dart_towards(d, from, to);
    return face_has(d, dart, witness) ? dart : dart_towards(d, to, from);
}

// ... and of the one that does not.
DartId side_without(const Drawing& d, VertexId from, VertexId to, VertexId witness) {
    const DartId dart = dart_towards(d, from, to);
    return face_has(d, dart, witness) ? dart_towards(d, to, from) : dart;
}

}  // namespace

OnePlaneGraph gen_cycle(std::size_t n) {
    require(n >= 3, "a cycle needs at least 3 vertices");
    CylinderBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        b.add(static_cast<double>(i) / static_cast<double>(n), 1.0, std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        b.join(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    }
    return b.build();
}

OnePlaneGraph gen_H(int k) {
    require(k >= 1, "k must be at least 1");
    Layout lay;
    add_H(lay, k, 'a', false);
    return lay.builder.build();
}

OnePlaneGraph gen_HH(int k) {
    require(k >= 1, "k must be at least 1");
    return hh_layout(k).builder.build();
}

OnePlaneGraph gen_XH(int k) { return crossed_hh(k, false); }
OnePlaneGraph gen_YH(int k) { return crossed_hh(k, true); }

OnePlaneGraph gen_M(int k) {
    require(k >= 1, "k must be at least 1");
    return m_layout(k).builder.build();
}

OnePlaneGraph gen_XM(int k) {
    require(k >= 1, "k must be at least 1");
    const MLayout lay = m_layout(k);
    const auto& u = lay.u;
    const OnePlaneGraph base = lay.builder.build();
    Drawing d = base.drawing();

    // The caps are the faces of rings 1 and k away from the neighbouring ring; for
    // k = 1 they are the two sides of the only ring.
    const DartId inner = k >= 2 ? side_without(d, u[1][0], u[1][1], u[2][0])
                                : dart_towards(d, u[1][0], u[1][1]);
    const DartId outer_cap = k >= 2 ? side_without(d, u[k][0], u[k][1], u[k - 1][0])
                                    : dart_towards(d, u[1][1], u[1][0]);

    std::vector<std::pair<int, int>> quads;
    std::vector<DartId> quad_darts;
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < 4; ++i) {
            quads.emplace_back(j, i);
            quad_darts.push_back(side_with(d, u[j][i], u[j][(i + 1) % 4], u[j + 1][i]));
        }
    }

    // Inner cap, walk c0..c3 starting at the walk's u1 corner with the lowest index.
    {
        const auto walk = face_walk(d.map(), inner);
        std::size_t start = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (d.map().origin(walk[i]) == u[1][0]) start = i;
        }
        const auto c = face_corners(d, walk[start]);
        const K2Result r = k2_triangulate(d, walk[start]);
        d.set_label(r.x, "x");
        d.set_label(r.y, "y");
        if (k >= 2) {
            insert_crossing_edge(d, c[0], c[2], r.xy);
        } else {
            // c0-c2 is a diagonal of the other cap as well.
            insert_crossing_edge(d, c[1], r.y, edge_between(d, r.x, c[2]));
        }
    }

    for (std::size_t q = 0; q < quads.size(); ++q) {
        const auto [j, i] = quads[q];
        const VertexId w = k1_triangulate(d, quad_darts[q]);
        d.set_label(w, name('w', j, i));
        const EdgeId s1 = edge_between(d, w, u[j][(i + 1) % 4]);
        const EdgeId s2 = edge_between(d, w, u[j + 1][i]);
        insert_crossing_edge(d, u[j][i], u[j + 1][(i + 1) % 4], std::min(s1, s2));
    }

    {
        const auto walk = face_walk(d.map(), outer_cap);
        std::size_t start = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (d.map().origin(walk[i]) == u[k][0]) start = i;
        }
        tx_triangulate(d, walk[start]);
    }
    return finalize(d);
}

OnePlaneGraph gen_PXM(int k) {
    require(k >= 2, "k must be at least 2");
    const MLayout lay = m_layout(k);
    const auto& u = lay.u;
    Drawing d = lay.builder.build().drawing();
    insert_edge(d, u[1][0], u[1][2]);
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < 4; ++i) insert_edge(d, u[j][i], u[j + 1][(i + 1) % 4]);
    }
    insert_edge(d, u[k][0], u[k][2]);
    return finalize(d);
}

OnePlaneGraph gen_random_seed(std::size_t n, std::uint64_t seed) {
    require(n >= 4, "random drawings need at least 4 vertices");
    std::mt19937_64 rng(seed);
    auto below = [&](std::size_t m) { return std::uniform_int_distribution<std::size_t>(0, m - 1)(rng); };

    Drawing d;
    d.add_true_vertex();
    for (std::size_t i = 1; i < n; ++i) {
        const auto u = static_cast<VertexId>(below(i));
        const VertexId v = d.add_true_vertex();
        const auto rot = d.map().rotation(u);
        const DartId corner = rot.empty() ? kNone : rot[below(rot.size())];
        d.add_edge(v, kNone, u, corner);
    }

    const std::size_t chords = below(2 * n);
    for (std::size_t t = 0; t < chords; ++t) {
        const FaceSet fs = trace_faces(d.map());
        const auto& walk = fs.walks[below(fs.size())];
        const VertexId a = d.map().origin(walk[below(walk.size())]);
        const VertexId b = d.map().origin(walk[below(walk.size())]);
        if (a == b || d.adjacent(a, b)) continue;
        d.add_edge(a, corner_in_walk(d.map(), walk, a), b, corner_in_walk(d.map(), walk, b));
    }

    const std::size_t crossings = below(n / 2 + 1);
    for (std::size_t t = 0; t < crossings; ++t) {
        const FaceSet fs = trace_faces(d.map());
        std::vector<DartId> quads;
        for (const auto& walk : fs.walks) {
            if (walk.size() != 4) continue;
            const auto c = face_corners(d, walk.front());
            const bool simple = std::all_of(c.begin(), c.end(), [&](VertexId v) { return v < d.num_true(); }) &&
                                c[0] != c[2] && c[1] != c[3];
            if (simple && !d.adjacent(c[0], c[2]) && !d.adjacent(c[1], c[3])) quads.push_back(walk.front());
        }
        if (quads.empty()) break;
        tx_triangulate(d, quads[below(quads.size())]);
    }
    return finalize(d);
}

OnePlaneGraph load_fixture(const std::string& path) { return finalize(read_1pg(path)); }

std::optional<Family> parse_family(std::string_view s) {
    if (s == "h") return Family::H;
    if (s == "hh") return Family::HH;
    if (s == "xh") return Family::XH;
    if (s == "yh") return Family::YH;
    if (s == "m") return Family::M;
    if (s == "xm") return Family::XM;
    if (s == "pxm") return Family::PXM;
    if (s == "fixture") return Family::Fixture;
    return std::nullopt;
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::H: return "h";
        case Family::HH: return "hh";
        case Family::XH: return "xh";
        case Family::YH: return "yh";
        case Family::M: return "m";
        case Family::XM: return "xm";
        case Family::PXM: return "pxm";
        case Family::Fixture: return "fixture";
    }
    return "?";
}

FamilyStats expected_stats(Family f, int k) {
    require(k >= 1 && k <= 24, "k out of range");
    const std::uint64_t p = 1ULL << (k + 1);  // 2^{k+1}
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    switch (f) {
        case Family::H: return {2 * p - 4, 0, 4 * p - 12};
        case Family::HH: {
            const std::uint64_t n = 5 * p - 8;
            return {n, 0, 12 * (n - 2) / 5};
        }
        case Family::XH: {
            const std::uint64_t n = 5 * p - 8, cr = 3 * p - 6;
            return {n, cr, 3 * n - 6 + cr};
        }
        case Family::YH: {
            const std::uint64_t n = 9 * p - 16, cr = 3 * p - 6;
            return {n, cr, 3 * n - 6 + cr};
        }
        case Family::M: return {4 * kk, 0, 8 * kk - 4};
        case Family::XM: {
            const std::uint64_t n = 8 * kk - 2, cr = 4 * kk - 2;
            return {n, cr, 3 * n - 6 + cr};
        }
        case Family::PXM: return {4 * kk, 0, 12 * kk - 6};
        case Family::Fixture: break;
    }
    throw Error(ErrorCode::BadParameter, "fixtures have no closed form");
}

OnePlaneGraph generate(Family f, int k) {
    switch (f) {
        case Family::H: return gen_H(k);
        case Family::HH: return gen_HH(k);
        case Family::XH: return gen_XH(k);
        case Family::YH: return gen_YH(k);
        case Family::M: return gen_M(k);
        case Family::XM: return gen_XM(k);
        case Family::PXM: return gen_PXM(k);
        case Family::Fixture: break;
    }
    throw Error(ErrorCode::BadParameter, "fixtures are loaded, not generated");
}

}  // namespace onep
