#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onep/one_plane_graph.hpp"

namespace onep {

struct PropertyViolation {
    std::string property;
    std::string detail;
};

struct InstanceReport {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t crossings = 0;
    std::size_t edges = 0;
    std::size_t connectivity = 0;
    bool triangulation = false;
    std::optional<bool> immovable;
    std::vector<PropertyViolation> violations;
};

// Checks every invariant that must hold for a maximal drawing: the general edge lower
// bound, the crossing upper bounds, the face/crossing lemmas, the skeleton and dual
// identities, triangulation under high connectivity and the connectivity class bounds.
InstanceReport check_properties(const OnePlaneGraph& g);

// Random drawing on n vertices, saturated with the same seed, then checked.
InstanceReport fuzz_instance(std::size_t n, std::uint64_t seed);

struct FuzzSummary {
    std::vector<InstanceReport> instances;  // in instance order
    std::size_t violation_count() const;
};

// Instance i uses a seed derived from (seed, i) and an order drawn from [n_min, n_max].
// Instances run on `threads` workers; the result does not depend on the thread count.
FuzzSummary fuzz(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed,
                 unsigned threads = 1);

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

}  // namespace onep
