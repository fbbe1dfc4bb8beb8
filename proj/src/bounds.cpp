#include "onep/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "onep/maximality.hpp"

namespace onep {

std::string_view to_string(Cmp c) noexcept {
    switch (c) {
        case Cmp::Ge: return ">=";
        case Cmp::Le: return "<=";
        case Cmp::Eq: return "==";
    }
    return "?";
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string BoundEntry::line() const {
    std::ostringstream os;
    os << id << ' ' << format_rational(lhs) << ' ' << to_string(cmp) << ' ' << format_rational(rhs)
       << ' ' << to_string(status);
    return os.str();
}

bool BoundReport::all_pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const BoundEntry& e) { return e.status == CheckStatus::Fail; });
}

const BoundEntry* BoundReport::find(std::string_view id) const {
    for (const auto& e : entries) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

std::string BoundReport::machine_readable() const {
    std::string out;
    for (const auto& e : entries) out += e.line() + '\n';
    return out;
}

namespace {

bool holds(const Rational& lhs, Cmp cmp, const Rational& rhs) {
    switch (cmp) {
        case Cmp::Ge: return lhs >= rhs;
        case Cmp::Le: return lhs <= rhs;
        case Cmp::Eq: return lhs == rhs;
    }
    return false;
}

}  // namespace

BoundReport verify_bounds(const OnePlaneGraph& g, const BoundOptions& opts) {
    const bool maximal = opts.maximal.has_value() ? *opts.maximal : is_maximal(g).maximal;
    if (!maximal) throw Error(ErrorCode::NotMaximal, "bounds are stated for maximal drawings");

    BoundReport r;
    r.n = g.order();
    r.crossings = g.crossing_count();
    r.edges = g.size();
    r.connectivity = opts.connectivity.has_value() ? *opts.connectivity
                                                   : vertex_connectivity(g.underlying());
    r.triangulation = is_triangulation(g.faces(), g.map());
    r.immovable = opts.immovable;
    if (!r.immovable && r.connectivity >= 3) r.immovable = is_immovable_unchecked(g).immovable;

    const auto n = static_cast<long long>(r.n);
    const Rational cr(static_cast<long long>(r.crossings));
    const Rational m(static_cast<long long>(r.edges));
    const Membership member{true, r.connectivity, r.immovable};

    auto add = [&](std::string id, Rational lhs, Cmp cmp, Rational rhs, bool applicable,
                   std::string note) {
        BoundEntry e{std::move(id), lhs, cmp, rhs, CheckStatus::NotApplicable, std::move(note)};
        if (applicable) e.status = holds(lhs, cmp, rhs) ? CheckStatus::Pass : CheckStatus::Fail;
        r.entries.push_back(std::move(e));
    };

    struct Row {
        const char* suffix;
        std::size_t k;
        long long min_n;
        Rational cr_rhs;
        Rational e_rhs;
    };
    const Row rows[] = {
        {"k3", 3, 5, Rational(n - 2, 3), Rational(10 * (n - 2), 3)},
        {"k4", 4, 6, Rational(n - 2, 2), Rational(7 * (n - 2), 2)},
        {"k5_6", 5, 0, Rational(3 * n - 6, 5), Rational(18 * (n - 2), 5)},
        {"k7", 7, 0, Rational(3 * n, 4), Rational(15 * (n - 2), 4) + Rational(3, 2)},
    };
    for (const Row& row : rows) {
        const bool member_k = in_class(member, row.k);
        const bool applicable = member_k && n >= row.min_n;
        std::string note;
        if (!member_k) {
            note = row.k == 3 && r.connectivity >= 3 ? "not immovable" : "connectivity below " + std::to_string(row.k);
        } else if (!applicable) {
            note = "n below " + std::to_string(row.min_n);
        }
        add(std::string("thm4.") + row.suffix, cr, Cmp::Ge, row.cr_rhs, applicable, note);
        add(std::string("thm5.") + row.suffix, m, Cmp::Ge, row.e_rhs, applicable, note);
    }

    add("tc", m, Cmp::Ge, Rational(7 * n, 3) - 3, n >= 5, n >= 5 ? "" : "n below 5");
    add("ub.n-2", cr, Cmp::Le, Rational(n - 2), n >= 3, n >= 3 ? "" : "n below 3");
    const DegreeProfile p = degree_profile(g.underlying());
    const Rational lam(static_cast<long long>(2 * p.lambda1 + 2 * p.lambda2 + p.lambda3), 6);
    // The bound constrains cr(G), of which cr_x is an upper bound: a drawing within the
    // bound certifies it, and cr(G) = cr_x only when the planarization is a triangulation.
    const Rational lam_rhs = Rational(n - 2) - lam;
    const bool certified = cr <= lam_rhs || r.triangulation;
    add("ub.lambda", cr, Cmp::Le, lam_rhs, n >= 3 && certified,
        n < 3 ? "n below 3" : certified ? "" : "cr(G) not certified: cr_x exceeds the bound off a triangulation");

    const std::string tri_note = r.triangulation ? "" : "planarization is not a triangulation";
    add("remark10.edges", m, Cmp::Eq, Rational(3 * n - 6) + cr, r.triangulation, tri_note);
    if (r.triangulation) {
        const DualMap dm = dual(skeleton(g));
        add("obs2.red", cr, Cmp::Eq, Rational(static_cast<long long>(dm.count(FaceKind::Red)), 2), true, "");
    } else {
        add("obs2.red", cr, Cmp::Eq, Rational(0), false, tri_note);
    }
    return r;
}

}  // namespace onep
