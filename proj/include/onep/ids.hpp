#pragma once

#include <cstdint>
#include <limits>

namespace onep {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using DartId = std::uint32_t;
using SegmentId = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// TRUE vertices are vertices of the drawn graph, FAKE vertices are crossing points
// of the planarization.
enum class VertexKind : std::uint8_t { True, Fake };

// Which piece of an edge a planarization segment is. An uncrossed edge is a single
// WHOLE segment; a crossed edge u-v with crossing x splits into u-x (USide) and x-v (VSide).
enum class Half : std::uint8_t { Whole, USide, VSide };

inline constexpr DartId twin(DartId d) noexcept { return d ^ 1u; }
inline constexpr SegmentId segment_of(DartId d) noexcept { return d >> 1; }

}  // namespace onep
