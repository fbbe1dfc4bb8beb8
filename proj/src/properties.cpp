#include "onep/properties.hpp"

#include <atomic>
#include <thread>

#include "onep/analyze.hpp"
#include "onep/bounds.hpp"
#include "onep/generators.hpp"
#include "onep/interchange.hpp"
#include "onep/maximality.hpp"
#include "onep/transform.hpp"

namespace onep {

namespace {

std::string s(std::size_t x) { return std::to_string(x); }

class Recorder {
public:
    explicit Recorder(InstanceReport& r) : r_(r) {}
    void expect(bool ok, std::string property, std::string detail = {}) {
        if (!ok) r_.violations.push_back({std::move(property), std::move(detail)});
    }
    void lemma(const LemmaCheck& c, const std::string& property) {
        expect(c.status != CheckStatus::Fail, property, c.witness);
    }

private:
    InstanceReport& r_;
};

void check_skeleton(const OnePlaneGraph& g, SkeletonStrategy strategy, const std::string& tag,
                    bool triangulation, Recorder& rec) {
    const Skeleton sk = skeleton(g, strategy);
    const DualMap dm = dual(sk);
    const std::size_t n = g.order();
    const FaceSet& gf = g.faces();
    rec.expect(sk.removed.size() == g.crossing_count(), tag + " removes one edge per crossing");
    rec.expect(2 * dm.count(FaceKind::Red) <= gf.count(FaceKind::Fake),
               tag + " red faces at most half the fake faces");
    rec.expect(dm.count(FaceKind::Blue) == gf.count(FaceKind::True), tag + " blue faces equal true faces");
    for (FaceId f = 0; f < dm.order(); ++f) {
        if (dm.color[f] != FaceKind::Red) continue;
        bool red_nb = false;
        for (FaceId o : dm.adjacency[f]) red_nb = red_nb || (o != f && dm.color[o] == FaceKind::Red);
        rec.expect(red_nb, tag + " red vertex has a red neighbour", "face " + s(f));
        rec.expect(sk.constituents[f].size() >= 2, tag + " red face merges at least two fake faces",
                   "face " + s(f));
    }
    for (FaceId f = 0; f < dm.order(); ++f) {
        rec.expect(dm.degree(f) == sk.faces.walks[f].size(), tag + " dual degree equals face length");
    }
    if (triangulation) {
        rec.expect(is_triangulation(sk.faces, sk.map), tag + " skeleton is a triangulation");
        rec.expect(sk.size() == 3 * n - 6 && sk.faces.size() == 2 * n - 4,
                   tag + " skeleton has 3n-6 edges and 2n-4 faces");
        rec.expect(dm.is_regular(3) && dm.order() == 2 * n - 4 && dm.size() == 3 * n - 6,
                   tag + " dual is 3-regular with 2n-4 vertices");
        rec.expect(2 * g.crossing_count() == dm.count(FaceKind::Red), tag + " crossings are half the red vertices");
        rec.expect(g.size() == 3 * n - 6 + g.crossing_count(), "edges equal 3n-6+cr");
        if (is_triangulation(sk.faces, sk.map)) {
            const RegularityReport reg = regularity_checks(sk.map);
            rec.expect(reg.consistent, tag + " degree criteria agree with connectivity");
        }
    }
}

}  // namespace

InstanceReport check_properties(const OnePlaneGraph& g) {
    InstanceReport r;
    Recorder rec(r);
    r.n = g.order();
    r.crossings = g.crossing_count();
    r.edges = g.size();

    rec.expect(finalize(parse_1pg(serialize_1pg(g))) == g, "interchange round trip");
    const MaximalityResult mx = is_maximal(g);
    rec.expect(mx.maximal, "drawing is maximal");
    if (!mx.maximal) return r;

    r.connectivity = vertex_connectivity(g.underlying());
    r.triangulation = is_triangulation(g.faces(), g.map());
    const ImmovabilityResult im = is_immovable_unchecked(g);
    r.immovable = im.immovable;
    if (!im.immovable && im.route) {
        const ValidationResult h = validate(remove_edge(g.raw(), im.witness));
        bool ok = h.ok();
        if (ok) {
            const OnePlaneGraph redrawn = apply_candidate(*h.graph, *im.route);
            ok = redrawn.crossing_count() + 1 == g.crossing_count();
        }
        rec.expect(ok, "immovability witness redraws without crossings", "edge " + s(im.witness));
    }

    const Membership m{true, r.connectivity, r.immovable};
    if (r.connectivity >= 4) rec.expect(r.triangulation, "4-connected drawing has a triangulated planarization");
    if (r.connectivity >= 3 && *r.immovable) {
        rec.expect(r.triangulation, "3-connected immovable drawing has a triangulated planarization");
    }
    rec.lemma(check_lemma3(g, m), "face vertices pairwise adjacent");
    rec.lemma(check_lemma4(g, m), "crossing pairs induce K4");
    rec.lemma(check_lemma11(g, m), "crossed degree bounds");

    check_skeleton(g, SkeletonStrategy::LexMax, "lexmax", r.triangulation, rec);
    check_skeleton(g, SkeletonStrategy::LexMin, "lexmin", r.triangulation, rec);
    const DualMap dm = dual(skeleton(g));
    for (std::size_t k = 3; k <= 5; ++k) {
        rec.lemma(check_lemma9(g, m, k), "true faces adjacent to at most 5-k true faces, k=" + s(k));
        rec.lemma(check_cor10(dm, g, m, k), "blue vertices adjacent to at most 5-k blue vertices, k=" + s(k));
    }

    const BoundReport br = verify_bounds(g, {true, r.connectivity, r.immovable});
    for (const auto& e : br.entries) {
        rec.expect(e.status != CheckStatus::Fail, "bound " + e.id, e.line());
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
        const int now = g.edge(e).crossed() ? 1 : 0;
        if (now == 0) continue;
        rec.expect(min_redraw_crossings(g, e).crossings <= now, "redraw never adds crossings");
    }
    return r;
}

InstanceReport fuzz_instance(std::size_t n, std::uint64_t seed) {
    const OnePlaneGraph base = gen_random_seed(n, seed);
    const OnePlaneGraph sat = saturate(base, SaturationPolicy::Seeded, seed);
    InstanceReport r = check_properties(sat);
    r.seed = seed;
    if (sat.order() != base.order()) r.violations.push_back({"saturation keeps the vertex set", {}});
    return r;
}

std::size_t FuzzSummary::violation_count() const {
    std::size_t c = 0;
    for (const auto& r : instances) c += r.violations.size();
    return c;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FuzzSummary fuzz(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed,
                 unsigned threads) {
    if (count == 0 || n_min < 4 || n_max < n_min) {
        throw Error(ErrorCode::BadParameter, "fuzz needs count >= 1 and 4 <= n_min <= n_max");
    }
    FuzzSummary out;
    out.instances.resize(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::uint64_t s = instance_seed(seed, i);
            const std::size_t n = n_min + static_cast<std::size_t>(s % (n_max - n_min + 1));
            out.instances[i] = fuzz_instance(n, s);
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace onep
