#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "onep/one_plane_graph.hpp"

namespace onep {

// Plain-text ".1pg" documents, line oriented:
//
//   1pg 1
//   v <id> <T|F> [label]           one per vertex, ids dense
//   e <id> <u> <v> [crossing]      one per edge, ids dense
//   r <vertex> <edge>:<w|u|v> ...  clockwise rotation; w = whole edge,
//                                  u / v = the half towards that endpoint
//
// Blank lines and lines starting with '#' are ignored. Records may appear in any
// order; the serializer writes v, e, r records in id order.

inline constexpr std::string_view kFormatHeader = "1pg 1";

// Throws PARSE_ERROR with the offending line number.
RawDrawing parse_1pg(std::string_view text);
std::string serialize_1pg(const RawDrawing& raw);
std::string serialize_1pg(const OnePlaneGraph& g);

// File helpers; IO_ERROR when the file cannot be read or written.
RawDrawing read_1pg(const std::string& path);
void write_1pg(const std::string& path, const OnePlaneGraph& g);

}  // namespace onep
