#include "orbsurf/covers.hpp"

namespace orbsurf {

CoverResult cyclic_cover_invariants(const SurfaceModel& s, const DivisorClass& l, int m) {
    if (m < 1)
        throw std::invalid_argument("cover degree must be >= 1, got " + std::to_string(m));

    const Int kl = s.intersect(s.canonical(), l);
    const Int ll = s.self_intersection(l);
    const Int mm = m;

    CoverResult r;
    r.m = m;
    r.c1_sq = mm * (s.c1_sq() + (mm - 1) * (2 * kl + (mm - 1) * ll));
    r.c2 = mm * (s.c2() + (mm - 1) * (kl + mm * ll));
    r.difference = mm * ((s.c1_sq() - s.c2()) + (mm - 1) * (kl - ll));
    r.assumptions = {
        "smooth irreducible member of |" + std::to_string(m) + "L| assumed to exist (not verified)",
        "canonical class of the cover taken as the pullback of K + " + std::to_string(m - 1) + "L",
    };
    return r;
}

DoubleCover double_cover_quadric(long long k, long long a, long long b) {
    if (k < 1 || a < 1 || b < 1)
        throw std::invalid_argument("double_cover_quadric needs k, a, b >= 1, got k=" +
                                    std::to_string(k) + " a=" + std::to_string(a) + " b=" +
                                    std::to_string(b));

    const Int ik = k, ia = a, ib = b;

    // Branch divisor lies in |2L| for L = O(k+2, 2) on the base.
    SurfaceModel base = quadric_surface();
    DivisorClass l{Int(ik + 2), Int(2)};
    CoverResult cover = cyclic_cover_invariants(base, l, 2);

    std::string name = "B0[k=" + std::to_string(k) + ",a=" + std::to_string(a) + ",b=" +
                       std::to_string(b) + "]";
    SurfaceModel b0(std::move(name), {"F1", "F2"},
                    {{Int(0), Int(2)}, {Int(2), Int(0)}},
                    DivisorClass{ik, Int(0)}, cover.c2);

    // The declared model must reproduce the cover computation exactly.
    if (b0.c1_sq() != cover.c1_sq)
        throw std::logic_error("double cover model: c1_sq mismatch (" + to_string(b0.c1_sq()) +
                               " vs " + to_string(cover.c1_sq) + ")");
    b0.chi_O_integer();

    DoubleCover out{std::move(b0), DivisorClass{ib, ia * ib}, k, a, b};
    return out;
}

P1P2Record p1p2_check(const SurfaceModel& s, const DivisorClass& l, int m) {
    if (m < 1)
        throw std::invalid_argument("cover degree must be >= 1, got " + std::to_string(m));

    const Int kl = s.intersect(s.canonical(), l);
    const Int ll = s.self_intersection(l);
    const Int denom = kl - ll;

    P1P2Record r;
    r.p1 = denom > 0;
    if (!r.p1) {
        r.note = "K.L - L.L = " + to_string(denom) + " is not positive; P2 threshold undefined";
        return r;
    }
    r.p2_threshold = Rat(1) - Rat(s.c1_sq() - s.c2(), denom);
    r.p2 = Rat(m) > *r.p2_threshold;
    return r;
}

} // namespace orbsurf
