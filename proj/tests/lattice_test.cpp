#include "orbsurf/lattice.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace orbsurf;
using testsupport::pick;
using testsupport::Rng;

TEST_CASE("projective plane invariants") {
    SurfaceModel p2 = projective_plane();
    CHECK(p2.c1_sq() == 9);
    CHECK(p2.c2() == 3);
    CHECK(p2.chi_O_integer() == 1);
    DivisorClass h{Int(1)};
    CHECK(p2.self_intersection(h) == 1);
    CHECK(p2.genus_of(h) == 0);               // line
    CHECK(p2.genus_of(Int(2) * h) == 0);      // conic
    CHECK(p2.genus_of(Int(3) * h) == 1);      // cubic
    CHECK(p2.genus_of(Int(5) * h) == 6);      // quintic
}

TEST_CASE("quadric surface invariants") {
    SurfaceModel q = quadric_surface();
    CHECK(q.c1_sq() == 8);
    CHECK(q.c2() == 4);
    CHECK(q.chi_O_integer() == 1);
    DivisorClass d{Int(6), Int(4)};
    CHECK(q.self_intersection(d) == 48);
    CHECK(q.intersect(q.canonical(), d) == -20);
    CHECK(q.genus_of(d) == 15);
    CHECK(q.genus_of(DivisorClass{Int(1), Int(0)}) == 0);
}

TEST_CASE("pairing matches dense reference and is bilinear") {
    Rng rng(0xA11CE);
    for (int it = 0; it < 300; ++it) {
        SurfaceModel s = testsupport::random_surface(rng);
        DivisorClass x = testsupport::random_class(rng, s.rank());
        DivisorClass y = testsupport::random_class(rng, s.rank());
        DivisorClass z = testsupport::random_class(rng, s.rank());
        CHECK(s.intersect(x, y) == testsupport::pair_reference(s.gram(), x, y));
        CHECK(s.intersect(x, y) == s.intersect(y, x));
        CHECK(s.intersect(x + y, z) == s.intersect(x, z) + s.intersect(y, z));
        Int scale = pick(rng, -7, 7);
        CHECK(s.intersect(scale * x, y) == scale * s.intersect(x, y));
    }
}

TEST_CASE("non-integer adjunction genus is returned, not hidden") {
    SurfaceModel s("odd", {"v"}, {{Int(1)}}, DivisorClass{Int(0)}, Int(0));
    CHECK(s.genus_of(DivisorClass{Int(1)}) == Rat(3, 2));
}

TEST_CASE("construction rejects malformed data") {
    CHECK_THROWS_AS(SurfaceModel("bad", {"a", "b"},
                                 {{Int(0), Int(1)}, {Int(2), Int(0)}},
                                 DivisorClass{Int(0), Int(0)}, Int(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel("bad", {"a"}, {{Int(1)}}, DivisorClass{Int(0), Int(1)}, Int(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel("bad", {}, {}, DivisorClass{}, Int(0)), std::invalid_argument);
}

TEST_CASE("rank mismatch errors name the lattice") {
    SurfaceModel p2 = projective_plane();
    try {
        p2.intersect(DivisorClass{Int(1), Int(2)}, DivisorClass{Int(1)});
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("P2") != std::string::npos);
    }
}

TEST_CASE("noether integrality is demanded only on request") {
    SurfaceModel s("frac", {"v"}, {{Int(1)}}, DivisorClass{Int(0)}, Int(5));
    CHECK(s.chi_O() == Rat(5, 12));
    CHECK_THROWS_AS(s.chi_O_integer(), std::domain_error);
}

TEST_CASE("blowup bookkeeping") {
    SurfaceModel p2 = projective_plane();
    Blowup bl = blow_up(p2, 3);
    const SurfaceModel& s = bl.surface();
    CHECK(s.rank() == 4);
    CHECK(s.c1_sq() == 6);
    CHECK(s.c2() == 6);
    CHECK(s.chi_O() == p2.chi_O());
    CHECK(s.basis_labels() == std::vector<std::string>{"H", "E1", "E2", "E3"});

    DivisorClass h = bl.pullback(DivisorClass{Int(1)});
    for (int i = 0; i < 3; ++i) {
        CHECK(s.self_intersection(bl.exceptional(i)) == -1);
        CHECK(s.intersect(bl.exceptional(i), h) == 0);
        CHECK(s.intersect(s.canonical(), bl.exceptional(i)) == -1);
        for (int j = i + 1; j < 3; ++j)
            CHECK(s.intersect(bl.exceptional(i), bl.exceptional(j)) == 0);
    }
    CHECK(s.genus_of(h) == p2.genus_of(DivisorClass{Int(1)}));
    CHECK_THROWS_AS(blow_up(p2, -1), std::invalid_argument);
}

TEST_CASE("one n-point blowup equals n iterated single blowups") {
    Rng rng(0xB10);
    for (int it = 0; it < 40; ++it) {
        SurfaceModel base = testsupport::random_surface(rng, 3);
        int n = static_cast<int>(pick(rng, 1, 5));
        SurfaceModel direct = blow_up(base, n).surface();
        SurfaceModel iterated = base;
        for (int i = 0; i < n; ++i) iterated = blow_up(iterated, 1).surface();
        CHECK(direct.gram() == iterated.gram());
        CHECK(direct.canonical() == iterated.canonical());
        CHECK(direct.c2() == iterated.c2());
        CHECK(direct.basis_labels() == iterated.basis_labels());
    }
}

TEST_CASE("strict transform of a pencil member keeps its genus") {
    SurfaceModel q = quadric_surface();
    DivisorClass l{Int(2), Int(4)};
    Int n = q.self_intersection(l);
    CHECK(n == 16);
    Blowup bl = blow_up(q, 16);
    DivisorClass d = bl.pullback(l) - bl.exceptional_sum();
    CHECK(bl.surface().self_intersection(d) == 0);
    CHECK(bl.surface().genus_of(d) == q.genus_of(l));
    CHECK(q.genus_of(l) == 3);
}
