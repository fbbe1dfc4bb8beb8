#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "onep/one_plane_graph.hpp"

namespace onep {

// Plane cycle C_n (n >= 3).
OnePlaneGraph gen_cycle(std::size_t n);

// H^k: cycles C_4, C_8, ..., C_{2^{k+1}} joined by radial edges.
OnePlaneGraph gen_H(int k);
// H^k o H^k: two copies of H^k glued through a ring of 2^{k+1} vertices.
OnePlaneGraph gen_HH(int k);
// T-cross on every quadrangle of H^k o H^k.
OnePlaneGraph gen_XH(int k);
// K1 on every triangle, then T-cross on every quadrangle of H^k o H^k.
OnePlaneGraph gen_YH(int k);
// M^k = C_4 x P_k drawn as k concentric 4-cycles.
OnePlaneGraph gen_M(int k);
// K2 plus a diagonal on the innermost quadrangle of M^k, T-cross on the outermost,
// K1 plus a crossing diagonal on every other quadrangle.
OnePlaneGraph gen_XM(int k);
// The plane triangulation of M^k by one diagonal per quadrangle that XM^k contains (k >= 2).
OnePlaneGraph gen_PXM(int k);

// Random connected plane drawing on n >= 4 vertices with a few crossing quadrangles;
// identical for identical (n, seed).
OnePlaneGraph gen_random_seed(std::size_t n, std::uint64_t seed);

// Reads and validates a .1pg file (PARSE_ERROR, VALIDATION_FAILED, IO_ERROR).
OnePlaneGraph load_fixture(const std::string& path);

enum class Family { H, HH, XH, YH, M, XM, PXM, Fixture };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f) noexcept;

// Closed-form order, crossing number and size of a family member.
struct FamilyStats {
    std::uint64_t n;
    std::uint64_t cr;
    std::uint64_t edges;
};
FamilyStats expected_stats(Family f, int k);

// Builds a family member (not Fixture). BAD_PARAMETER for k out of range.
OnePlaneGraph generate(Family f, int k);

}  // namespace onep
