#include <algorithm>

#include <doctest.h>

#include "onep/generators.hpp"
#include "onep/transform.hpp"

using namespace onep;

TEST_CASE("planarization triangulation flag") {
    const Planarization yh = planarization(gen_YH(1));
    CHECK(yh.map.num_vertices() == 26);
    CHECK(yh.map.num_segments() == 72);
    CHECK(yh.triangulation);
    CHECK_FALSE(planarization(gen_HH(1)).triangulation);
    CHECK(planarization(gen_XM(2)).triangulation);
}

TEST_CASE("skeleton of XH^1") {
    const OnePlaneGraph g = gen_XH(1);
    const Skeleton s = skeleton(g);
    CHECK(s.order() == 12);
    CHECK(s.size() == 30);
    CHECK(s.faces.size() == 20);
    CHECK(s.faces.count(FaceKind::Blue) == 8);
    CHECK(s.faces.count(FaceKind::Red) == 12);
    CHECK(s.removed.size() == 6);
    CHECK(is_triangulation(s.map));
}

TEST_CASE("skeleton removes one edge per crossing pair") {
    const OnePlaneGraph g = gen_YH(1);
    for (SkeletonStrategy st : {SkeletonStrategy::LexMax, SkeletonStrategy::LexMin}) {
        const Skeleton s = skeleton(g, st);
        REQUIRE(s.removed.size() == g.crossing_count());
        for (EdgeId e : s.removed) {
            const EdgeId f = g.partner(e);
            REQUIRE(f != kNone);
            CHECK(std::find(s.removed.begin(), s.removed.end(), f) == s.removed.end());
            CHECK(std::find(s.source_edge.begin(), s.source_edge.end(), f) != s.source_edge.end());
            if (st == SkeletonStrategy::LexMax) CHECK(e > f);
            if (st == SkeletonStrategy::LexMin) CHECK(e < f);
        }
        CHECK(s.size() == g.size() - g.crossing_count());
    }
}

TEST_CASE("skeleton red and blue faces match the planarization faces") {
    const OnePlaneGraph g = gen_XH(2);
    const Skeleton s = skeleton(g);
    for (FaceId f = 0; f < s.faces.size(); ++f) {
        const auto& parts = s.constituents[f];
        REQUIRE_FALSE(parts.empty());
        if (s.faces.kind[f] == FaceKind::Blue) {
            REQUIRE(parts.size() == 1);
            CHECK(g.faces().kind[parts[0]] == FaceKind::True);
            CHECK(s.faces.walks[f].size() == g.faces().walks[parts[0]].size());
        } else {
            CHECK(parts.size() >= 2);
            for (FaceId p : parts) CHECK(g.faces().kind[p] == FaceKind::Fake);
        }
    }
}

TEST_CASE("skeleton of a crossing-free drawing is the drawing") {
    const OnePlaneGraph g = gen_HH(2);
    const Skeleton s = skeleton(g);
    CHECK(s.size() == g.size());
    CHECK(s.faces.size() == g.faces().size());
    CHECK(s.faces.count(FaceKind::Blue) == s.faces.size());
    CHECK(s.removed.empty());
}

TEST_CASE("explicit skeleton selection") {
    const OnePlaneGraph g = gen_XH(1);
    const Skeleton lex = skeleton(g, SkeletonStrategy::LexMin);
    const Skeleton exp = skeleton(g, SkeletonStrategy::Explicit, lex.removed);
    CHECK(exp.removed == lex.removed);
    CHECK(exp.source_edge == lex.source_edge);

    std::vector<EdgeId> partial(lex.removed.begin(), lex.removed.end() - 1);
    try {
        (void)skeleton(g, SkeletonStrategy::Explicit, partial);
        FAIL("uncovered crossing pair accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadExplicitSelection);
    }
    std::vector<EdgeId> both = lex.removed;
    both.push_back(g.partner(lex.removed[0]));
    CHECK_THROWS_AS((void)skeleton(g, SkeletonStrategy::Explicit, both), Error);

    EdgeId uncrossed = 0;
    while (g.edge(uncrossed).crossed()) ++uncrossed;
    std::vector<EdgeId> stray = lex.removed;
    stray.push_back(uncrossed);
    CHECK_THROWS_AS((void)skeleton(g, SkeletonStrategy::Explicit, stray), Error);
}

TEST_CASE("dual of the XH^1 and YH^1 skeletons") {
    const DualMap dx = dual(skeleton(gen_XH(1)));
    CHECK(dx.order() == 20);
    CHECK(dx.count(FaceKind::Red) == 12);
    CHECK(dx.count(FaceKind::Blue) == 8);
    CHECK(dx.is_regular(3));
    CHECK(dx.size() == 30);

    const DualMap dy = dual(skeleton(gen_YH(1)));
    CHECK(dy.order() == 36);
    CHECK(dy.count(FaceKind::Red) == 12);
    CHECK(dy.count(FaceKind::Blue) == 24);
}

TEST_CASE("dual degrees equal face lengths") {
    for (const OnePlaneGraph& g : {gen_HH(1), gen_XH(2), gen_YH(1), gen_XM(3)}) {
        const Skeleton s = skeleton(g);
        const DualMap d = dual(s);
        REQUIRE(d.order() == s.faces.size());
        std::size_t total = 0;
        for (FaceId f = 0; f < d.order(); ++f) {
            CHECK(d.degree(f) == s.faces.walks[f].size());
            total += d.degree(f);
        }
        CHECK(total == 2 * s.size());
    }
}

TEST_CASE("every red dual vertex has a red neighbour") {
    for (Family f : {Family::XH, Family::YH, Family::XM}) {
        for (int k = 1; k <= 2; ++k) {
            const DualMap d = dual(skeleton(generate(f, k)));
            for (FaceId v = 0; v < d.order(); ++v) {
                if (d.color[v] != FaceKind::Red) continue;
                const bool red_neighbour = std::any_of(d.adjacency[v].begin(), d.adjacency[v].end(),
                                                       [&](FaceId w) { return d.color[w] == FaceKind::Red; });
                CHECK(red_neighbour);
            }
        }
    }
}

TEST_CASE("skeleton counts do not depend on the strategy") {
    for (const OnePlaneGraph& g : {gen_XH(2), gen_YH(2), gen_XM(3)}) {
        const Skeleton a = skeleton(g, SkeletonStrategy::LexMax);
        const Skeleton b = skeleton(g, SkeletonStrategy::LexMin);
        CHECK(a.size() == b.size());
        CHECK(a.faces.size() == b.faces.size());
        CHECK(a.faces.count(FaceKind::Red) == b.faces.count(FaceKind::Red));
        CHECK(a.faces.count(FaceKind::Blue) == b.faces.count(FaceKind::Blue));
    }
}

TEST_CASE("observation identities on triangulated planarizations") {
    for (const OnePlaneGraph& g : {gen_XH(1), gen_XH(2), gen_YH(1), gen_XM(2), gen_XM(4)}) {
        REQUIRE(planarization(g).triangulation);
        const std::size_t n = g.order();
        const Skeleton s = skeleton(g);
        CHECK(is_triangulation(s.map));
        CHECK(s.size() == 3 * n - 6);
        CHECK(s.faces.size() == 2 * n - 4);
        const DualMap d = dual(s);
        CHECK(d.is_regular(3));
        CHECK(d.count(FaceKind::Red) == 2 * g.crossing_count());
        CHECK(d.count(FaceKind::Blue) == g.faces().count(FaceKind::True));
        CHECK(2 * d.count(FaceKind::Red) <= g.faces().count(FaceKind::Fake));
        CHECK(g.size() == 3 * n - 6 + g.crossing_count());
    }
}

TEST_CASE("graph_of merges parallel segments") {
    const SimpleGraph sg = graph_of(gen_XH(1).map());
    CHECK(sg.order() == 18);
    CHECK(sg.size() == 48);
}
