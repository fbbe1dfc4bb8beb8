#include <cstdint>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "oracles.hpp"
#include "onep/analyze.hpp"
#include "onep/bounds.hpp"
#include "onep/generators.hpp"
#include "onep/interchange.hpp"
#include "onep/maximality.hpp"
#include "onep/operations.hpp"
#include "onep/transform.hpp"

using namespace onep;

namespace {

// Closed forms written out independently of expected_stats().
struct Counts {
    std::uint64_t n, cr, edges;
};

Counts closed_form(Family f, int k) {
    const std::uint64_t p = std::uint64_t{1} << (k + 1);
    const auto kk = static_cast<std::uint64_t>(k);
    switch (f) {
        case Family::H: return {2 * p - 4, 0, 4 * p - 12};  // rings plus two radials per inner vertex
        case Family::HH: return {5 * p - 8, 0, 2 * (4 * p - 12) + 4 * p};  // two houses plus the z ring
        case Family::XH: {
            const std::uint64_t n = 5 * p - 8, cr = 3 * p - 6;
            return {n, cr, 3 * n - 6 + cr};
        }
        case Family::YH: {
            const std::uint64_t n = 9 * p - 16, cr = 3 * p - 6;
            return {n, cr, 3 * n - 6 + cr};
        }
        case Family::M: return {4 * kk, 0, 4 * kk + 4 * (kk - 1)};
        case Family::XM: {
            const std::uint64_t n = 8 * kk - 2, cr = 4 * kk - 2;
            return {n, cr, 3 * n - 6 + cr};
        }
        default: return {0, 0, 0};
    }
}

std::size_t face_size(const OnePlaneGraph& g, FaceId f) { return g.faces().walks[f].size(); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("houses H^1 and H^2") {
    const OnePlaneGraph h1 = gen_H(1);
    CHECK(h1.order() == 4);
    CHECK(h1.size() == 4);
    CHECK(h1.faces().size() == 2);
    const OnePlaneGraph h2 = gen_H(2);
    CHECK(h2.order() == 12);
    CHECK(h2.size() == 20);
}

TEST_CASE("H^1 o H^1 faces alternate between triangles and quadrangles") {
    for (int k = 1; k <= 3; ++k) {
        const OnePlaneGraph g = gen_HH(k);
        std::size_t f3 = 0, f4 = 0;
        for (FaceId f = 0; f < g.faces().size(); ++f) {
            const std::size_t s = face_size(g, f);
            CHECK((s == 3 || s == 4));
            (s == 3 ? f3 : f4) += 1;
        }
        CHECK(5 * f3 == 4 * (g.order() - 2));
        CHECK(5 * f4 == 3 * (g.order() - 2));
        CHECK(3 * f3 == 4 * f4);
        const PlanarMap& map = g.map();
        for (DartId d = 0; d < map.num_darts(); ++d) {
            const FaceId a = g.faces().face_of_dart[d];
            const FaceId b = g.faces().face_of_dart[twin(d)];
            CHECK(face_size(g, a) != face_size(g, b));
        }
        if (k == 1) {
            CHECK(g.order() == 12);
            CHECK(f3 == 8);
            CHECK(f4 == 6);
        }
    }
}

TEST_CASE("XH, YH, M and XM examples") {
    const OnePlaneGraph xh2 = gen_XH(2);
    CHECK(xh2.order() == 32);
    CHECK(xh2.crossing_count() == 18);
    CHECK(xh2.size() == 108);

    const OnePlaneGraph yh2 = gen_YH(2);
    CHECK(yh2.order() == 56);
    CHECK(yh2.crossing_count() == 18);

    const OnePlaneGraph xh1 = gen_XH(1);
    for (VertexId v = 0; v < xh1.order(); ++v) CHECK(xh1.degree(v) == 6);

    const OnePlaneGraph m3 = gen_M(3);
    CHECK(m3.order() == 12);
    CHECK(m3.size() == 20);
    std::size_t quads = 0;
    for (FaceId f = 0; f < m3.faces().size(); ++f) quads += face_size(m3, f) == 4;
    CHECK(quads == 10);
    CHECK(m3.faces().size() == 10);

    const OnePlaneGraph xm1 = gen_XM(1);
    CHECK(xm1.order() == 6);
    CHECK(xm1.crossing_count() == 2);
    CHECK(xm1.size() == 14);

    const OnePlaneGraph xm2 = gen_XM(2);
    CHECK(xm2.order() == 14);
    CHECK(2 * xm2.size() == 7 * (xm2.order() - 2));
}

TEST_CASE("applying T-cross to every quadrangle of H^1 o H^1 gives XH^1") {
    OnePlaneGraph g = gen_HH(1);
    for (;;) {
        FaceId quad = kNone;
        for (FaceId f = 0; f < g.faces().size() && quad == kNone; ++f) {
            if (face_size(g, f) == 4) quad = f;
        }
        if (quad == kNone) break;
        g = tx_triangulate(g, quad);
    }
    CHECK(g.crossing_count() == 6);
    CHECK(g.size() == gen_XH(1).size());
}

TEST_CASE("closed forms for k up to 5") {
    for (Family f : {Family::H, Family::HH, Family::XH, Family::YH, Family::M, Family::XM}) {
        for (int k = 1; k <= 5; ++k) {
            CAPTURE(to_string(f));
            CAPTURE(k);
            const OnePlaneGraph g = generate(f, k);
            const Counts want = closed_form(f, k);
            CHECK(g.order() == want.n);
            CHECK(g.crossing_count() == want.cr);
            CHECK(g.size() == want.edges);
            const FamilyStats s = expected_stats(f, k);
            CHECK(s.n == want.n);
            CHECK(s.cr == want.cr);
            CHECK(s.edges == want.edges);
        }
    }
}

TEST_CASE("generators are byte-identical across runs") {
    for (Family f : {Family::H, Family::HH, Family::XH, Family::YH, Family::M, Family::XM, Family::PXM}) {
        for (int k = 2; k <= 3; ++k) CHECK(serialize_1pg(generate(f, k)) == serialize_1pg(generate(f, k)));
    }
    CHECK(serialize_1pg(gen_random_seed(8, 1)) == serialize_1pg(gen_random_seed(8, 1)));
}

TEST_CASE("family names") {
    CHECK(parse_family("xh") == Family::XH);
    CHECK(parse_family("hh") == Family::HH);
    CHECK_FALSE(parse_family("zz").has_value());
    for (Family f : {Family::H, Family::HH, Family::XH, Family::YH, Family::M, Family::XM})
        CHECK(parse_family(to_string(f)) == f);
}

TEST_CASE("parameters below one are rejected") {
    CHECK(code_of([] { (void)gen_H(0); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { (void)gen_XH(0); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { (void)gen_XM(-1); }) == ErrorCode::BadParameter);
    CHECK(code_of([] { (void)gen_random_seed(3, 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("triangulation operation counts") {
    // K1 on a triangle.
    const OnePlaneGraph c3 = gen_cycle(3);
    const OnePlaneGraph w = k1_triangulate(c3, 0);
    CHECK(w.order() == 4);
    CHECK(w.size() == 6);
    CHECK(w.crossing_count() == 0);

    // K2 on a quadrangle.
    const OnePlaneGraph c4 = gen_cycle(4);
    const OnePlaneGraph k2 = k2_triangulate(c4, 0);
    CHECK(k2.order() == 6);
    CHECK(k2.size() == 11);
    CHECK(k2.crossing_count() == 0);

    // T-cross on a quadrangle: four triangles around the crossing.
    const OnePlaneGraph tx = tx_triangulate(c4, 0);
    CHECK(tx.size() == 6);
    CHECK(tx.crossing_count() == 1);
    for (const OnePlaneGraph* g : {&w, &k2, &tx}) {
        std::size_t non_triangles = 0;
        for (FaceId f = 0; f < g->faces().size(); ++f) non_triangles += face_size(*g, f) != 3;
        // Only the untouched face of the cycle remains.
        CHECK(non_triangles == (g == &w ? 0 : 1));
    }
    const VertexId x = static_cast<VertexId>(tx.order());
    std::size_t around = 0;
    for (DartId d : tx.map().rotation(x)) around += face_size(tx, tx.faces().face_of_dart[d]) == 3;
    CHECK(around == 4);
}

TEST_CASE("triangulation operation errors") {
    CHECK(code_of([] { (void)tx_triangulate(gen_cycle(5), 0); }) == ErrorCode::FaceNotQuad);
    CHECK(code_of([] { (void)k2_triangulate(gen_cycle(3), 0); }) == ErrorCode::FaceNotQuad);
    CHECK(code_of([] { (void)k1_triangulate(gen_cycle(3), 7); }) == ErrorCode::UnknownFace);

    // A path 0-1-2 has one face whose walk visits 1 twice.
    Drawing path;
    for (int i = 0; i < 3; ++i) path.add_true_vertex();
    path.add_edge(1, kNone, 0, kNone);
    path.add_edge(2, kNone, 1, path.map().rotation(1).front());
    const OnePlaneGraph p = finalize(path);
    REQUIRE(p.faces().size() == 1);
    CHECK(code_of([&] { (void)tx_triangulate(p, 0); }) == ErrorCode::BoundaryNotSimple);

    // A face at a crossing.
    const OnePlaneGraph xh = gen_XH(1);
    FaceId fake = 0;
    while (xh.faces().kind[fake] != FaceKind::Fake) ++fake;
    CHECK(code_of([&] { (void)k1_triangulate(xh, fake); }) == ErrorCode::BoundaryNotSimple);

    // C4 with the chord 0-2 on one side: the other side is a quadrangle with that diagonal.
    Drawing chord = gen_cycle(4).drawing();
    insert_edge(chord, 0, 2);
    const OnePlaneGraph c = finalize(chord);
    FaceId quad = 0;
    while (face_size(c, quad) != 4) ++quad;
    CHECK(code_of([&] { (void)tx_triangulate(c, quad); }) == ErrorCode::DiagonalExists);
}

TEST_CASE("the T1 fixture") {
    const OnePlaneGraph t1 = load_fixture(ONEP_FIXTURE_DIR "/t1.1pg");
    CHECK(t1.order() == 24);
    CHECK(t1.crossing_count() == 18);
    CHECK(t1.size() == 84);
    CHECK(vertex_connectivity(t1.underlying()) == 7);
    CHECK(is_maximal(t1).maximal);
}

TEST_CASE("fixture errors") {
    const auto dir = std::filesystem::temp_directory_path() / "onep_test_generators";
    std::filesystem::create_directories(dir);
    const auto bad = dir / "bad.1pg";
    std::ofstream(bad) << "1pg 1\nv 0 T\nv 1 Q\n";
    CHECK(code_of([&] { (void)load_fixture(bad.string()); }) == ErrorCode::ParseError);

    const auto unsound = dir / "unsound.1pg";
    RawDrawing raw = gen_cycle(4).raw();
    raw.rotation[0].pop_back();
    std::ofstream(unsound) << serialize_1pg(raw);
    CHECK(code_of([&] { (void)load_fixture(unsound.string()); }) == ErrorCode::ValidationFailed);

    CHECK(code_of([&] { (void)load_fixture((dir / "missing.1pg").string()); }) == ErrorCode::IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("random drawings") {
    CHECK(gen_random_seed(8, 1) == gen_random_seed(8, 1));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const OnePlaneGraph g = gen_random_seed(4, seed);
        CHECK(g.order() == 4);
        CHECK(validate(g.raw()).ok());
    }
    const OnePlaneGraph s = saturate(gen_random_seed(12, 7), SaturationPolicy::Seeded, 7);
    CHECK(is_maximal(s).maximal);
    CHECK(oracle::brute_force_maximal(s));
    const BoundEntry* tc = verify_bounds(s).find("tc");
    REQUIRE(tc != nullptr);
    CHECK(tc->status == CheckStatus::Pass);
}

TEST_CASE("P(XH^k) from the LexMax skeleton") {
    // (5,6)-regular for k = 2; for k = 3 no choice of removed diagonals gives one.
    CHECK(regularity_checks(skeleton(gen_XH(2), SkeletonStrategy::LexMax).map).is_56_regular);
    CHECK(oracle::exists_56_regular_skeleton(gen_XH(2)));
    CHECK_FALSE(regularity_checks(skeleton(gen_XH(3), SkeletonStrategy::LexMax).map).is_56_regular);
    CHECK_FALSE(oracle::exists_56_regular_skeleton(gen_XH(3)));
}

TEST_CASE("P(XM^k) is a plane triangulation of M^k") {
    for (int k = 2; k <= 4; ++k) {
        const OnePlaneGraph p = gen_PXM(k);
        CHECK(p.order() == 4 * static_cast<std::size_t>(k));
        CHECK(p.crossing_count() == 0);
        CHECK(p.size() == 3 * p.order() - 6);
        CHECK(is_triangulation(p.faces(), p.map()));
    }
}
