#include "onep/operations.hpp"

#include <algorithm>
#include <string>

namespace onep {

namespace {

std::string vs(VertexId v) { return std::to_string(v); }

// Boundary vertices of the face, which must be distinct and true.
std::vector<VertexId> simple_true_boundary(const Drawing& d, DartId face) {
    auto c = face_corners(d, face);
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::BoundaryNotSimple, "face boundary repeats a vertex");
    }
    for (VertexId v : c) {
        if (d.map().is_fake(v)) throw Error(ErrorCode::BoundaryNotSimple, "face boundary has a crossing");
    }
    return c;
}

std::vector<VertexId> quad_boundary(const Drawing& d, DartId face) {
    if (face_walk(d.map(), face).size() != 4) throw Error(ErrorCode::FaceNotQuad, "face is not a quadrangle");
    return simple_true_boundary(d, face);
}

// Adds a-b inside the face of `face`; a vertex without darts takes the only corner.
EdgeId join_in_face(Drawing& d, DartId face, VertexId a, VertexId b) {
    const auto walk = face_walk(d.map(), face);
    const DartId ca = d.map().degree(a) == 0 ? kNone : corner_in_walk(d.map(), walk, a);
    const DartId cb = d.map().degree(b) == 0 ? kNone : corner_in_walk(d.map(), walk, b);
    return d.add_edge(a, ca, b, cb);
}

// A dart leaving v whose face contains all of `others`.
DartId face_with(const Drawing& d, VertexId v, std::initializer_list<VertexId> others) {
    for (DartId dart : d.map().rotation(v)) {
        const auto walk = face_walk(d.map(), dart);
        const bool all = std::all_of(others.begin(), others.end(), [&](VertexId w) {
            return std::any_of(walk.begin(), walk.end(),
                               [&](DartId x) { return d.map().origin(x) == w; });
        });
        if (all) return dart;
    }
    return kNone;
}

}  // namespace

std::vector<VertexId> face_corners(const Drawing& d, DartId face) {
    std::vector<VertexId> out;
    for (DartId dart : face_walk(d.map(), face)) out.push_back(d.map().origin(dart));
    return out;
}

VertexId k1_triangulate(Drawing& d, DartId face) {
    const auto walk = face_walk(d.map(), face);
    simple_true_boundary(d, face);
    const VertexId x = d.add_true_vertex();
    // Each boundary dart stays on the part of the face not yet cut off.
    for (DartId c : walk) join_in_face(d, c, x, d.map().origin(c));
    return x;
}

K2Result k2_triangulate(Drawing& d, DartId face) {
    const auto walk = face_walk(d.map(), face);
    const auto c = quad_boundary(d, face);
    const VertexId x = d.add_true_vertex();
    const VertexId y = d.add_true_vertex();
    join_in_face(d, walk[0], x, c[0]);
    join_in_face(d, walk[1], x, c[1]);
    join_in_face(d, walk[2], x, c[2]);
    join_in_face(d, walk[2], y, c[2]);
    join_in_face(d, walk[3], y, c[3]);
    join_in_face(d, walk[3], y, c[0]);
    const DartId region = face_with(d, y, {x, c[0], c[2]});
    const EdgeId xy = join_in_face(d, region, y, x);
    return {x, y, xy};
}

std::pair<EdgeId, EdgeId> tx_triangulate(Drawing& d, DartId face) {
    const auto walk = face_walk(d.map(), face);
    const auto c = quad_boundary(d, face);
    if (d.adjacent(c[0], c[2]) || d.adjacent(c[1], c[3])) {
        throw Error(ErrorCode::DiagonalExists, "a diagonal of the quadrangle is already an edge");
    }
    const EdgeId first = d.add_edge(c[0], walk[0], c[2], walk[2]);
    const EdgeId second = insert_crossing_edge(d, c[1], c[3], first);
    return {first, second};
}

EdgeId insert_edge(Drawing& d, VertexId u, VertexId v) {
    if (d.adjacent(u, v)) throw Error(ErrorCode::DiagonalExists, vs(u) + "-" + vs(v) + " already exists");
    const DartId region = face_with(d, u, {v});
    if (region == kNone) {
        throw Error(ErrorCode::BadParameter, vs(u) + " and " + vs(v) + " share no face");
    }
    return join_in_face(d, region, u, v);
}

EdgeId insert_crossing_edge(Drawing& d, VertexId u, VertexId v, EdgeId crossed) {
    if (d.adjacent(u, v)) throw Error(ErrorCode::DiagonalExists, vs(u) + "-" + vs(v) + " already exists");
    if (d.edge(crossed).crossed()) throw Error(ErrorCode::BadParameter, "edge is already crossed");
    const SegmentId s = d.segment_of_edge(crossed, Half::Whole);
    const PlanarMap& map = d.map();
    for (DartId side : {2 * s, 2 * s + 1}) {
        const auto w1 = face_walk(map, side);
        const auto w2 = face_walk(map, twin(side));
        const DartId cu = corner_in_walk(map, w1, u);
        const DartId cv = corner_in_walk(map, w2, v);
        if (cu != kNone && cv != kNone) return d.add_crossing_edge(u, cu, side, v, cv);
    }
    throw Error(ErrorCode::BadParameter,
                vs(u) + "-" + vs(v) + " cannot cross edge " + std::to_string(crossed));
}

namespace {

DartId face_dart(const OnePlaneGraph& g, FaceId f) {
    if (f >= g.faces().size()) throw Error(ErrorCode::UnknownFace, "face " + std::to_string(f));
    return g.faces().walks[f].front();
}

}  // namespace

OnePlaneGraph k1_triangulate(const OnePlaneGraph& g, FaceId face) {
    Drawing d = g.drawing();
    k1_triangulate(d, face_dart(g, face));
    return finalize(d);
}

OnePlaneGraph k2_triangulate(const OnePlaneGraph& g, FaceId face) {
    Drawing d = g.drawing();
    k2_triangulate(d, face_dart(g, face));
    return finalize(d);
}

OnePlaneGraph tx_triangulate(const OnePlaneGraph& g, FaceId face) {
    Drawing d = g.drawing();
    tx_triangulate(d, face_dart(g, face));
    return finalize(d);
}

}  // namespace onep
