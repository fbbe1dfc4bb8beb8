// Acceptance run: one status line per criterion. A FAIL line is only tolerated (exit
// code 0) when the run also verifies a certificate that the criterion is unattainable.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "onep/analyze.hpp"
#include "onep/bounds.hpp"
#include "onep/generators.hpp"
#include "onep/maximality.hpp"
#include "onep/properties.hpp"
#include "onep/transform.hpp"

using namespace onep;

namespace {

enum class Status { Pass, Fail, Skipped };

struct Outcome {
    Status status = Status::Pass;
    std::ostringstream detail;
    std::vector<std::string> failures;
    // Set when a FAIL comes with a certificate, verified here, that it cannot pass.
    bool certified_unattainable = false;

    void fail(const std::string& what) {
        status = Status::Fail;
        failures.push_back(what);
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

const char* name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

std::string tag(Family f, int k) { return std::string(to_string(f)) + std::to_string(k); }

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

struct Instance {
    Family family;
    int k;
    OnePlaneGraph g;
};

// Criterion 1 instances, built once.
std::vector<Instance> counted_instances() {
    std::vector<Instance> out;
    for (int k = 1; k <= 5; ++k) out.push_back({Family::XH, k, gen_XH(k)});
    for (int k = 1; k <= 5; ++k) out.push_back({Family::YH, k, gen_YH(k)});
    for (int k = 1; k <= 6; ++k) out.push_back({Family::XM, k, gen_XM(k)});
    return out;
}

Outcome criterion1(const std::vector<Instance>& inst) {
    Outcome o;
    for (const Instance& i : inst) {
        const std::uint64_t p = pow2(i.k + 1), k = static_cast<std::uint64_t>(i.k);
        std::uint64_t n = 0, cr = 0;
        if (i.family == Family::XH) n = 5 * p - 8, cr = 3 * p - 6;
        if (i.family == Family::YH) n = 9 * p - 16, cr = 3 * p - 6;
        if (i.family == Family::XM) n = 8 * k - 2, cr = 4 * k - 2;
        o.expect(i.g.order() == n && i.g.crossing_count() == cr && i.g.size() == 3 * n - 6 + cr,
                 tag(i.family, i.k) + " counts");
    }
    o.detail << inst.size() << " instances (XH, YH k=1..5; XM k=1..6)";
    return o;
}

Outcome criterion2(const std::vector<Instance>& inst) {
    Outcome o;
    for (const Instance& i : inst) {
        const Rational n(static_cast<long long>(i.g.order()));
        const Rational cr(static_cast<long long>(i.g.crossing_count()));
        const Rational m(static_cast<long long>(i.g.size()));
        Rational want_cr, want_m;
        if (i.family == Family::YH) want_cr = (n - 2) / 3, want_m = Rational(10, 3) * (n - 2);
        if (i.family == Family::XH) want_cr = Rational(3, 5) * (n - 2), want_m = Rational(18, 5) * (n - 2);
        if (i.family == Family::XM) want_cr = (n - 2) / 2, want_m = Rational(7, 2) * (n - 2);
        o.expect(cr == want_cr && m == want_m, tag(i.family, i.k) + " not on the tight line");
    }
    // The library's bound rows agree where their membership is cheap to establish.
    const struct {
        OnePlaneGraph g;
        const char* row4;
        const char* row5;
    } rows[] = {{gen_YH(1), "thm4.k3", "thm5.k3"}, {gen_YH(2), "thm4.k3", "thm5.k3"},
                {gen_XH(1), "thm4.k5_6", "thm5.k5_6"}, {gen_XH(2), "thm4.k5_6", "thm5.k5_6"},
                {gen_XM(2), "thm4.k4", "thm5.k4"}, {gen_XM(3), "thm4.k4", "thm5.k4"}};
    for (const auto& r : rows) {
        const BoundReport b = verify_bounds(r.g);
        for (const char* id : {r.row4, r.row5}) {
            const BoundEntry* e = b.find(id);
            o.expect(e && e->status == CheckStatus::Pass && e->tight(), std::string(id) + " row not tight");
        }
    }
    o.detail << "exact equalities on all criterion-1 instances; bound rows tight on YH1-2, XH1-2, XM2-3";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
        o.expect(vertex_connectivity(gen_YH(k).underlying()) == 3, "kappa(yh" + std::to_string(k) + ")");
        o.expect(vertex_connectivity(gen_XH(k).underlying()) == 6, "kappa(xh" + std::to_string(k) + ")");
    }
    for (int k = 1; k <= 4; ++k) {
        o.expect(vertex_connectivity(gen_XM(k).underlying()) == 4, "kappa(xm" + std::to_string(k) + ")");
    }
    o.detail << "YH k<=3: 3, XH k<=3: 6, XM k<=4: 4";
    return o;
}

Outcome criterion4(const std::vector<Instance>& inst) {
    Outcome o;
    std::vector<std::string> not_maximal;
    for (const Instance& i : inst) {
        if (!is_maximal(i.g).maximal) not_maximal.push_back(tag(i.family, i.k));
    }
    for (int k = 1; k <= 3; ++k) {
        for (const OnePlaneGraph& g : {gen_HH(k), gen_M(k)}) {
            const MaximalityResult r = is_maximal(g);
            o.expect(!r.maximal && r.witness.has_value(), "plane family reported maximal");
        }
    }
    o.detail << "HH, M k=1..3 not maximal with witnesses";
    if (not_maximal.empty()) {
        o.detail << "; every criterion-1 instance maximal";
        return o;
    }
    for (const std::string& t : not_maximal) o.fail(t + " not maximal");
    // Certificate: no maximal drawing on six vertices with at most 14 edges exists.
    const bool only_xm1 = not_maximal.size() == 1 && not_maximal[0] == "xm1";
    const oracle::SixVertexCensus census = oracle::maximal_sizes_on_six_vertices(14);
    o.certified_unattainable = only_xm1 && census.maximal.empty() && !oracle::brute_force_maximal(gen_XM(1));
    o.detail << "; exhaustive search over " << census.states
             << " drawings on 6 vertices finds no maximal one with <= 14 edges, so n=6, cr=2, |E|=14 "
                "cannot be maximal";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const ImmovabilityResult yh1 = is_immovable(gen_YH(1));
    const ImmovabilityResult yh2 = is_immovable(gen_YH(2));
    const ImmovabilityResult xh1 = is_immovable(gen_XH(1));
    o.detail << "yh1 " << (yh1.immovable ? "immovable" : "movable") << ", yh2 "
             << (yh2.immovable ? "immovable" : "movable") << ", xh1 " << (xh1.immovable ? "immovable" : "movable");
    for (int k = 1; k <= 2; ++k) {
        const OnePlaneGraph g = gen_YH(k);
        if (!(k == 1 ? yh1 : yh2).immovable) continue;
        const BoundEntry* e = verify_bounds(g).find("thm4.k3");
        o.expect(e && e->status == CheckStatus::Pass && e->tight(), "thm4.k3 row on yh" + std::to_string(k));
    }
    if (yh1.immovable && yh2.immovable) o.detail << "; thm4.k3 tight row certified on yh1, yh2";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const std::filesystem::path dir(ONEP_FIXTURE_DIR);
    const struct {
        const char* file;
        std::size_t n, cr;
    } fixtures[] = {{"t1.1pg", 24, 18}, {"t2.1pg", 56, 42}};
    bool missing = false;
    for (const auto& f : fixtures) {
        const std::filesystem::path path = dir / f.file;
        o.detail << f.file << ": ";
        if (!std::filesystem::exists(path)) {
            o.detail << "absent; ";
            missing = true;
            continue;
        }
        const OnePlaneGraph g = load_fixture(path.string());
        const Rational n(static_cast<long long>(g.order()));
        const bool ok = g.order() == f.n && g.crossing_count() == f.cr &&
                        vertex_connectivity(g.underlying()) == 7 && is_maximal(g).maximal &&
                        Rational(static_cast<long long>(g.crossing_count())) == Rational(3, 4) * n &&
                        Rational(static_cast<long long>(g.size())) == Rational(15, 4) * (n - 2) + Rational(3, 2);
        o.detail << (ok ? "PASS" : "FAIL") << " (n=" << g.order() << " cr=" << g.crossing_count()
                 << " |E|=" << g.size() << "); ";
        o.expect(ok, std::string(f.file) + " stats");
    }
    if (missing && o.status == Status::Pass) o.status = Status::Skipped;
    std::string text = o.detail.str();
    o.detail.str(text.substr(0, text.size() - 2));
    return o;
}

struct FuzzRun {
    FuzzSummary summary;
    std::vector<OnePlaneGraph> graphs;
};

FuzzRun run_fuzz() {
    constexpr std::size_t count = 200, n_min = 5, n_max = 20;
    constexpr std::uint64_t seed = 1;
    FuzzRun f;
    f.summary = fuzz(count, n_min, n_max, seed, std::max(1u, std::thread::hardware_concurrency()));
    for (std::size_t i = 0; i < count; ++i) {
        const InstanceReport& r = f.summary.instances[i];
        f.graphs.push_back(saturate(gen_random_seed(r.n, r.seed), SaturationPolicy::Seeded, r.seed));
    }
    return f;
}

Outcome criterion7(const FuzzRun& f) {
    Outcome o;
    std::size_t uncertified = 0;
    for (const OnePlaneGraph& g : f.graphs) {
        const BoundEntry* e = verify_bounds(g).find("ub.lambda");
        uncertified += e && e->status == CheckStatus::NotApplicable && e->lhs > e->rhs;
    }
    for (const InstanceReport& r : f.summary.instances) {
        for (const PropertyViolation& v : r.violations) o.fail("seed " + std::to_string(r.seed) + " " + v.property);
    }
    o.detail << f.summary.instances.size() << " instances, n in [5,20], " << f.summary.violation_count()
             << " violations; " << uncertified
             << " lambda rows not applicable (cr_x above the bound off a triangulation, so cr(G) is not certified)";
    return o;
}

Outcome criterion8(const FuzzRun& f) {
    Outcome o;
    std::vector<OnePlaneGraph> pool{gen_H(1), gen_H(2), gen_HH(1), gen_XH(1), gen_M(1), gen_M(2), gen_M(3),
                                    gen_XM(1), gen_PXM(2), gen_PXM(3), gen_cycle(4), gen_cycle(5)};
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const OnePlaneGraph base = gen_random_seed(4 + seed % 5, seed);
        pool.push_back(base);
        const auto c = insertion_candidates(base);
        if (!c.empty()) pool.push_back(apply_candidate(base, c[seed % c.size()]));
    }
    pool.insert(pool.end(), f.graphs.begin(), f.graphs.end());
    std::size_t maximal_checked = 0, kappa_checked = 0;
    for (const OnePlaneGraph& g : pool) {
        if (g.order() + g.crossing_count() <= 10) {
            ++maximal_checked;
            o.expect(is_maximal(g).maximal == oracle::brute_force_maximal(g), "maximality disagreement");
        }
        if (g.order() <= 12) {
            ++kappa_checked;
            o.expect(vertex_connectivity(g.underlying()) == oracle::cut_set_connectivity(g.underlying()),
                     "connectivity disagreement");
        }
    }
    o.detail << maximal_checked << " maximality comparisons (n+cr<=10), " << kappa_checked
             << " connectivity comparisons (n<=12)";
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
        const OnePlaneGraph g = gen_XH(k);
        for (VertexId v = 0; v < g.order(); ++v) {
            const std::size_t d = g.degree(v), c = g.crossed_degree(v);
            o.expect((d + 2) / 3 <= c && c <= d / 2, "xh" + std::to_string(k) + " vertex " + std::to_string(v));
        }
        const Membership m{true, vertex_connectivity(g.underlying()), std::nullopt};
        o.expect(check_lemma11(g, m).passed(), "library check on xh" + std::to_string(k));
    }
    const OnePlaneGraph xh1 = gen_XH(1);
    for (VertexId v = 0; v < xh1.order(); ++v) {
        o.expect(xh1.degree(v) == 6 && xh1.crossed_degree(v) == 2, "xh1 c(v)");
    }
    o.detail << "XH k<=3 within [ceil(deg/3), floor(deg/2)]; XH1 c(v)=2 everywhere";
    return o;
}

Outcome criterion10() {
    Outcome o;
    bool regular_fail_certified = true;
    for (int k = 2; k <= 3; ++k) {
        const OnePlaneGraph g = gen_XH(k);
        const RegularityReport r = regularity_checks(skeleton(g, SkeletonStrategy::LexMax).map);
        const std::size_t kappa = vertex_connectivity(g.underlying());
        o.expect(r.implied_connectivity <= kappa && r.consistent, "Lemma 16 contradicts kappa on xh" + std::to_string(k));
        if (!r.is_56_regular) {
            o.fail("skeleton of xh" + std::to_string(k) + " not (5,6)-regular");
            // No choice of one removed edge per crossing pair gives a (5,6)-regular skeleton.
            regular_fail_certified = regular_fail_certified && !oracle::exists_56_regular_skeleton(g);
        }
    }
    for (int k = 2; k <= 6; ++k) {
        const RegularityReport r = regularity_checks(gen_PXM(k).map());
        o.expect(r.hakimi_applicable && r.hakimi_value == 13 && r.hakimi_condition,
                 "P(XM^" + std::to_string(k) + ") value");
    }
    o.detail << "XH2 skeleton (5,6)-regular; Lemma 16 consistent with kappa for k=2,3; P(XM^k) value 13 < 14 for k=2..6";
    if (o.status == Status::Fail && regular_fail_certified) {
        o.certified_unattainable = true;
        o.detail << "; exhaustive search over removal choices finds no (5,6)-regular skeleton of XH3";
    }
    return o;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Instance> inst = counted_instances();
    const FuzzRun fz = run_fuzz();
    std::vector<Outcome> out;
    out.push_back(criterion1(inst));
    out.push_back(criterion2(inst));
    out.push_back(criterion3());
    out.push_back(criterion4(inst));
    out.push_back(criterion5());
    out.push_back(criterion6());
    out.push_back(criterion7(fz));
    out.push_back(criterion8(fz));
    out.push_back(criterion9());
    out.push_back(criterion10());

    int rc = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Outcome& o = out[i];
        std::string failed;
        for (const std::string& f : o.failures) failed += (failed.empty() ? " | failed: " : ", ") + f;
        std::printf("criterion %zu: %s %s%s\n", i + 1, name(o.status), o.detail.str().c_str(), failed.c_str());
        if (o.status == Status::Fail && !o.certified_unattainable) rc = 1;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("elapsed %.1f s\n", secs);
    if (rc != 0) std::printf("a FAIL line has no verified unattainability certificate\n");
    return rc;
}
