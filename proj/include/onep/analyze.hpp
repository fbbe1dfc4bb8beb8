#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onep/connectivity.hpp"
#include "onep/one_plane_graph.hpp"
#include "onep/transform.hpp"

namespace onep {

struct DegreeProfile {
    std::vector<std::size_t> histogram;  // histogram[d] = number of vertices of degree d
    std::size_t min_degree = 0;
    std::size_t lambda1 = 0;  // degree 2
    std::size_t lambda2 = 0;  // degree 4
    std::size_t lambda3 = 0;  // odd degree w with deg(w) <= 9 or G - w 2-connected

    std::size_t omega(std::size_t d) const { return d < histogram.size() ? histogram[d] : 0; }
};

DegreeProfile degree_profile(const SimpleGraph& g);

// S induces a cycle of the map's graph and removing S disconnects it.
bool is_separating_cycle(const PlanarMap& map, std::span<const VertexId> s);

struct RegularityReport {
    bool is_56_regular = false;
    bool hakimi_applicable = false;  // minimum degree >= 4
    std::size_t hakimi_value = 0;    // floor(7 omega(4) / 3) + omega(5)
    bool hakimi_condition = false;   // applicable and value < 14
    std::size_t implied_connectivity = 0;
    std::size_t connectivity = 0;    // computed
    bool consistent = true;          // computed >= implied
};

// Degree-based connectivity criteria for plane triangulations, cross-checked against
// the computed connectivity. Throws NOT_TRIANGULATION.
RegularityReport regularity_checks(const PlanarMap& triangulation);

struct NearOptimalReport {
    bool near_optimal = false;
    std::vector<std::string> violations;
};

// Checks the face structure of the subgraph of uncrossed edges: every face is a
// triangle or quadrangle, each quadrangle holds exactly the crossing of its two
// diagonals, and no edge lies on two triangles.
NearOptimalReport is_near_optimal(const OnePlaneGraph& g);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string_view to_string(CheckStatus s) noexcept;

struct LemmaCheck {
    CheckStatus status = CheckStatus::NotApplicable;
    std::string witness;  // counterexample, or the unmet precondition

    bool passed() const noexcept { return status == CheckStatus::Pass; }
};

// Facts about g established elsewhere; they decide which statements apply.
struct Membership {
    bool maximal = false;
    std::size_t connectivity = 0;
    std::optional<bool> immovable;
};

// Whether g is in the class of k-connected maximal drawings (immovable when k = 3).
bool in_class(const Membership& m, std::size_t k);

// Every face boundary has at least two vertices and its true vertices are pairwise adjacent.
LemmaCheck check_lemma3(const OnePlaneGraph& g, const Membership& m);
// The endpoints of two crossing edges induce K4.
LemmaCheck check_lemma4(const OnePlaneGraph& g, const Membership& m);
// Each true face is adjacent to at most 5-k true faces (3 <= k <= 5).
LemmaCheck check_lemma9(const OnePlaneGraph& g, const Membership& m, std::size_t k);
// Each blue dual vertex has at most 5-k blue neighbours.
LemmaCheck check_cor10(const DualMap& dual, const OnePlaneGraph& g, const Membership& m,
                       std::size_t k);
// ceil(deg/3) <= c(v) <= floor(deg/2) for every vertex when k >= 5.
LemmaCheck check_lemma11(const OnePlaneGraph& g, const Membership& m);

}  // namespace onep
