#pragma once

#include "orbsurf/numeric.hpp"

#include <string>
#include <vector>

namespace orbsurf {

// Coefficient vector over the basis of some SurfaceModel. The class itself
// carries no back-pointer; every SurfaceModel operation checks the length
// and reports the lattice by name on mismatch.
struct DivisorClass {
    std::vector<Int> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Int> c) : coeffs(std::move(c)) {}
    DivisorClass(std::initializer_list<Int> c) : coeffs(c) {}

    static DivisorClass zero(int rank) { return DivisorClass(std::vector<Int>(static_cast<std::size_t>(rank))); }

    int rank() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Int& s);
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Int& s, DivisorClass a);
DivisorClass operator-(DivisorClass a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

// Numerical model of a smooth projective surface: a finitely generated
// intersection lattice with a distinguished canonical class plus the
// topological Euler number c2. c1_sq and chi(O) are derived, never stored
// independently, so the model cannot go out of sync.
class SurfaceModel {
public:
    // gram must be square, symmetric, rank = basis_labels.size();
    // canonical.rank() must match. No unimodularity or signature
    // assumption: any symmetric integer pairing is accepted.
    SurfaceModel(std::string name,
                 std::vector<std::string> basis_labels,
                 std::vector<std::vector<Int>> gram,
                 DivisorClass canonical,
                 Int c2);

    const std::string& name() const { return name_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis_labels() const { return basis_; }
    const std::vector<std::vector<Int>>& gram() const { return gram_; }
    const DivisorClass& canonical() const { return canonical_; }
    const Int& c1_sq() const { return c1_sq_; }
    const Int& c2() const { return c2_; }

    // (c1_sq + c2) / 12 as an exact rational; integrality is a theorem
    // for honest surfaces, not for arbitrary lattices, so it is not
    // enforced here.
    Rat chi_O() const;
    // Same value with integrality demanded; throws naming the surface.
    Int chi_O_integer() const;

    Int intersect(const DivisorClass& x, const DivisorClass& y) const;
    Int self_intersection(const DivisorClass& x) const { return intersect(x, x); }

    // Adjunction: 1 + (D.D + K.D)/2. Non-integer results are legal for
    // classes of the wrong parity and are returned as-is.
    Rat genus_of(const DivisorClass& d) const;

    DivisorClass basis_class(int i) const;

private:
    void check_class(const DivisorClass& c, const char* role) const;

    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Int>> gram_;
    // Sparse view of gram_, built once. Blowups produce mostly-diagonal
    // matrices; pairings walk only the nonzero entries.
    struct Entry {
        int i;
        int j;
        Int g;
    };
    std::vector<Entry> nonzero_;
    DivisorClass canonical_;
    Int c2_;
    Int c1_sq_;
};

SurfaceModel projective_plane();
// P1 x P1 with the two rulings as basis.
SurfaceModel quadric_surface();

// Blowup at n distinct points: rank grows by n, each exceptional curve
// E_i has E_i.E_i = -1 and pairs to zero with everything else, the
// canonical class gains +1 on each E_i, c2 gains n, chi(O) is unchanged.
class Blowup {
public:
    const SurfaceModel& surface() const { return surface_; }
    int points() const { return points_; }

    // Total-transform embedding of a class from the blown-down surface.
    DivisorClass pullback(const DivisorClass& c) const;
    DivisorClass exceptional(int i) const; // 0-based
    DivisorClass exceptional_sum() const;

private:
    friend Blowup blow_up(const SurfaceModel& s, int n);
    Blowup(SurfaceModel s, int base_rank, int points)
        : surface_(std::move(s)), base_rank_(base_rank), points_(points) {}

    SurfaceModel surface_;
    int base_rank_;
    int points_;
};

Blowup blow_up(const SurfaceModel& s, int n);

} // namespace orbsurf
