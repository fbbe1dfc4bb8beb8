#pragma once

#include <vector>

#include "onep/one_plane_graph.hpp"

namespace onep {

// Face operations on a mutable drawing; the face is named by any dart on it.

// Cone vertex joined to every boundary vertex. Returns the new vertex.
VertexId k1_triangulate(Drawing& d, DartId face);

struct K2Result {
    VertexId x;  // joined to corners 0, 1, 2 of the face walk
    VertexId y;  // joined to corners 2, 3, 0
    EdgeId xy;
};
// Joined pair x, y inside a quadrangle.
K2Result k2_triangulate(Drawing& d, DartId face);

// Both diagonals of a quadrangle, crossing each other. The diagonal through the
// first and third corners of the walk gets the smaller edge id.
std::pair<EdgeId, EdgeId> tx_triangulate(Drawing& d, DartId face);

// Corners of the face walk starting at `face` (vertex sequence).
std::vector<VertexId> face_corners(const Drawing& d, DartId face);

// Adds an uncrossed edge u-v through the first face (in dart order) bordered by both.
// Throws DIAGONAL_EXISTS if u, v are adjacent, BAD_PARAMETER if no face fits.
EdgeId insert_edge(Drawing& d, VertexId u, VertexId v);

// Adds u-v crossing the uncrossed edge `crossed`, with u and v on opposite sides.
EdgeId insert_crossing_edge(Drawing& d, VertexId u, VertexId v, EdgeId crossed);

// Validated wrappers; the face is a face id of g.
OnePlaneGraph k1_triangulate(const OnePlaneGraph& g, FaceId face);
OnePlaneGraph k2_triangulate(const OnePlaneGraph& g, FaceId face);
OnePlaneGraph tx_triangulate(const OnePlaneGraph& g, FaceId face);

}  // namespace onep
