#include "orbsurf/covers.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace orbsurf;
using testsupport::pick;
using testsupport::Rng;

TEST_CASE("double cover of the plane branched in a conic") {
    CoverResult r = cyclic_cover_invariants(projective_plane(), DivisorClass{Int(1)}, 2);
    CHECK(r.c1_sq == 8);
    CHECK(r.c2 == 4);
    CHECK(r.difference == 4);
    CHECK(r.assumptions.size() == 2);
}

TEST_CASE("degree one cover is the identity") {
    Rng rng(0xC0FE);
    for (int it = 0; it < 100; ++it) {
        SurfaceModel s = testsupport::random_surface(rng);
        DivisorClass l = testsupport::random_class(rng, s.rank());
        CoverResult r = cyclic_cover_invariants(s, l, 1);
        CHECK(r.c1_sq == s.c1_sq());
        CHECK(r.c2 == s.c2());
        CHECK(r.difference == s.c1_sq() - s.c2());
    }
}

TEST_CASE("difference field always equals c1_sq minus c2") {
    Rng rng(0xD1FF);
    for (int it = 0; it < 500; ++it) {
        SurfaceModel s = testsupport::random_surface(rng);
        DivisorClass l = testsupport::random_class(rng, s.rank());
        int m = static_cast<int>(pick(rng, 1, 25));
        CoverResult r = cyclic_cover_invariants(s, l, m);
        CHECK(r.difference == r.c1_sq - r.c2);
    }
}

TEST_CASE("cover rejects degree zero") {
    CHECK_THROWS_AS(cyclic_cover_invariants(projective_plane(), DivisorClass{Int(1)}, 0),
                    std::invalid_argument);
}

TEST_CASE("elliptic double cover family over the quadric") {
    for (long long k = 1; k <= 20; ++k) {
        DoubleCover dc = double_cover_quadric(k, 1, 1);
        CHECK(dc.surface.c1_sq() == 0);
        CHECK(dc.surface.c2() == 12 * (Int(k) + 2));
        CHECK(dc.surface.chi_O_integer() == Int(k) + 2);
        // The model agrees with the cover formulas applied to the base.
        CoverResult direct = cyclic_cover_invariants(
            quadric_surface(), DivisorClass{Int(k + 2), Int(2)}, 2);
        CHECK(direct.c1_sq == dc.surface.c1_sq());
        CHECK(direct.c2 == dc.surface.c2());
    }
}

TEST_CASE("pulled-back pairing doubles the base pairing") {
    Rng rng(0xD0B1);
    SurfaceModel q = quadric_surface();
    for (int it = 0; it < 200; ++it) {
        DoubleCover dc = double_cover_quadric(pick(rng, 1, 25), pick(rng, 1, 25),
                                              pick(rng, 1, 25));
        DivisorClass x = testsupport::random_class(rng, 2);
        DivisorClass y = testsupport::random_class(rng, 2);
        CHECK(dc.surface.intersect(x, y) == 2 * q.intersect(x, y));
    }
}

TEST_CASE("pencil numerology on the double cover") {
    Rng rng(0x9E2C);
    for (int it = 0; it < 100; ++it) {
        long long k = pick(rng, 1, 12), a = pick(rng, 1, 12), b = pick(rng, 1, 6);
        DoubleCover dc = double_cover_quadric(k, a, b);
        const Int ik = k, ia = a, ib = b;
        CHECK(dc.surface.intersect(dc.surface.canonical(), dc.pencil) == 2 * ik * ia * ib);
        CHECK(dc.surface.self_intersection(dc.pencil) == 4 * ia * ib * ib);
        CHECK(dc.surface.genus_of(dc.pencil) == Rat(Int(1 + ik * ia * ib + 2 * ia * ib * ib)));
    }
    CHECK_THROWS_AS(double_cover_quadric(0, 1, 1), std::invalid_argument);
}

TEST_CASE("p2 threshold for the k=3 pencil") {
    DoubleCover dc = double_cover_quadric(3, 1, 1);
    P1P2Record at32 = p1p2_check(dc.surface, dc.pencil, 32);
    CHECK(at32.p1);
    CHECK(at32.p2);
    REQUIRE(at32.p2_threshold.has_value());
    CHECK(*at32.p2_threshold == Rat(31));

    P1P2Record at31 = p1p2_check(dc.surface, dc.pencil, 31);
    CHECK(at31.p1);
    CHECK_FALSE(at31.p2); // the inequality is strict
}

TEST_CASE("p1 failure leaves the threshold undefined") {
    DoubleCover dc = double_cover_quadric(1, 1, 1); // K.L - L.L = 2 - 4 < 0
    P1P2Record r = p1p2_check(dc.surface, dc.pencil, 10);
    CHECK_FALSE(r.p1);
    CHECK_FALSE(r.p2);
    CHECK_FALSE(r.p2_threshold.has_value());
    CHECK(r.note.find("not positive") != std::string::npos);
}

TEST_CASE("under p1, p2 is equivalent to a positive cover difference") {
    for (long long k = 1; k <= 8; ++k)
        for (long long a = 1; a <= 6; ++a)
            for (long long b = 1; b <= 2; ++b) {
                DoubleCover dc = double_cover_quadric(k, a, b);
                for (int m = 1; m <= 20; ++m) {
                    P1P2Record p = p1p2_check(dc.surface, dc.pencil, m);
                    CoverResult c = cyclic_cover_invariants(dc.surface, dc.pencil, m);
                    if (p.p1) CHECK(p.p2 == (c.difference > 0));
                }
            }
}
