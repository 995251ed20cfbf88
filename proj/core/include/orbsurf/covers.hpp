#pragma once

#include "orbsurf/lattice.hpp"

#include <optional>

namespace orbsurf {

// Chern numbers of a degree-m cyclic cover branched along a smooth member
// of |mL|. Existence and smoothness of the branch divisor are the caller's
// assertion; they are recorded in `assumptions`, never checked.
struct CoverResult {
    int m = 1;
    Int c1_sq;
    Int c2;
    // c1_sq - c2 of the cover, computed directly from base data; kept as a
    // separate field so the additive identity can be tested against the
    // other two.
    Int difference;
    std::vector<std::string> assumptions;
};

// m = 1 returns the invariants of S itself.
CoverResult cyclic_cover_invariants(const SurfaceModel& s, const DivisorClass& l, int m);

// Double cover of P1 x P1 branched in |O(2(k+2), 4)|, modeled on the
// sublattice pulled back from the base: basis (pullbacks of the two
// rulings), pairing doubled, canonical class (k, 0). `pencil` is the
// pullback of O(b, a*b), the class swept by the distinguished curve
// family used downstream.
struct DoubleCover {
    SurfaceModel surface;
    DivisorClass pencil;
    long long k = 0;
    long long a = 0;
    long long b = 0;
};

DoubleCover double_cover_quadric(long long k, long long a, long long b);

// P1: K.L > L.L.
// P2: m exceeds 1 - (c1_sq - c2)/(K.L - L.L), evaluated exactly.
// Under P1 the pair is equivalent to a positive cover difference; P2 alone
// is meaningless when the denominator is not positive, so `p2` is false and
// `p2_threshold` absent whenever P1 fails.
struct P1P2Record {
    bool p1 = false;
    bool p2 = false;
    std::optional<Rat> p2_threshold;
    std::string note;
};

P1P2Record p1p2_check(const SurfaceModel& s, const DivisorClass& l, int m);

} // namespace orbsurf
