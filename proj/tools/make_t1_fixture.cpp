// Writes the 7-regular drawing T1: a rhombicuboctahedron whose 18 square faces
// each receive both crossing diagonals.
//
//   make_t1_fixture <out.1pg>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "onep/error.hpp"
#include "onep/interchange.hpp"
#include "onep/operations.hpp"

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// All sign choices of every cyclic shift of (1, 1, 1 + sqrt 2).
std::vector<Vec3> rhombicuboctahedron() {
    const double big = 1.0 + std::sqrt(2.0);
    std::vector<Vec3> pts;
    for (int axis = 0; axis < 3; ++axis) {
        for (int signs = 0; signs < 8; ++signs) {
            Vec3 p{1.0, 1.0, 1.0};
            p[static_cast<std::size_t>(axis)] = big;
            for (std::size_t c = 0; c < 3; ++c) {
                if (signs & (1 << c)) p[c] = -p[c];
            }
            pts.push_back(p);
        }
    }
    return pts;
}

onep::OnePlaneGraph build_t1() {
    using namespace onep;
    const std::vector<Vec3> pts = rhombicuboctahedron();
    const std::size_t n = pts.size();

    RawDrawing raw;
    raw.kinds.assign(n, VertexKind::True);
    for (std::size_t i = 0; i < n; ++i) raw.labels.push_back("p" + std::to_string(i));
    // Edge length is 2; the next distance is 2 sqrt 2.
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            const Vec3 d = sub(pts[a], pts[b]);
            if (std::abs(dot(d, d) - 4.0) < 1e-9) raw.edges.push_back({a, b, {}});
        }
    }

    std::vector<std::vector<std::pair<double, EdgeId>>> around(n);
    for (EdgeId e = 0; e < raw.edges.size(); ++e) {
        for (const auto& [from, to] : {std::pair{raw.edges[e].u, raw.edges[e].v},
                                       std::pair{raw.edges[e].v, raw.edges[e].u}}) {
            // Angle of the edge in the tangent plane at `from`, seen from outside.
            const Vec3& normal = pts[from];
            const Vec3 ref = std::abs(normal[0]) < 2.0 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
            const Vec3 x = cross(ref, normal);
            const Vec3 y = cross(normal, x);
            const Vec3 d = sub(pts[to], pts[from]);
            around[from].emplace_back(std::atan2(dot(d, y), dot(d, x)), e);
        }
    }
    raw.rotation.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        std::sort(around[v].begin(), around[v].end(), std::greater<>());
        for (const auto& [angle, e] : around[v]) raw.rotation[v].push_back({e, Half::Whole});
    }

    OnePlaneGraph g = finalize(raw);
    for (;;) {
        const FaceSet& faces = g.faces();
        FaceId quad = kNone;
        for (FaceId f = 0; f < faces.size() && quad == kNone; ++f) {
            if (faces.walks[f].size() == 4 && faces.kind[f] == FaceKind::True) quad = f;
        }
        if (quad == kNone) break;
        g = tx_triangulate(g, quad);
    }
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: make_t1_fixture <out.1pg>\n");
        return 2;
    }
    try {
        const onep::OnePlaneGraph g = build_t1();
        onep::write_1pg(argv[1], g);
        std::printf("n=%zu cr=%zu |E|=%zu\n", g.order(), g.crossing_count(), g.size());
    } catch (const onep::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
