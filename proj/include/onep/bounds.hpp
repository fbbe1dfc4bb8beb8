#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "onep/analyze.hpp"

namespace onep {

using Rational = boost::rational<long long>;

enum class Cmp { Ge, Le, Eq };
std::string_view to_string(Cmp c) noexcept;
std::string format_rational(const Rational& r);

struct BoundEntry {
    std::string id;
    Rational lhs;
    Cmp cmp = Cmp::Ge;
    Rational rhs;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string note;

    bool tight() const { return lhs == rhs; }
    // "id lhs cmp rhs status"
    std::string line() const;
};

struct BoundReport {
    std::size_t n = 0;
    std::size_t crossings = 0;
    std::size_t edges = 0;
    std::size_t connectivity = 0;
    bool triangulation = false;
    std::optional<bool> immovable;
    std::vector<BoundEntry> entries;

    bool all_pass() const;  // no FAIL entry
    const BoundEntry* find(std::string_view id) const;
    std::string machine_readable() const;
};

// Facts the caller already knows; anything left empty is computed.
struct BoundOptions {
    std::optional<bool> maximal;
    std::optional<std::size_t> connectivity;
    std::optional<bool> immovable;
};

// Evaluates every lower bound of the connectivity classes g belongs to, the general
// edge lower bound, both crossing upper bounds and the triangulation identities, in
// exact arithmetic. Immovability is computed when the k = 3 rows need it.
// Throws NOT_MAXIMAL.
BoundReport verify_bounds(const OnePlaneGraph& g, const BoundOptions& opts = {});

}  // namespace onep
