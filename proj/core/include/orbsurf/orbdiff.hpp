#pragma once

#include "orbsurf/lattice.hpp"

#include <optional>

namespace orbsurf {

// Fiber multiplicity: a finite integer >= 2, or infinity (reduced boundary,
// pole-order convention).
class Multiplicity {
public:
    static Multiplicity finite(int m) {
        if (m < 2)
            throw std::invalid_argument("finite multiplicity must be >= 2, got " +
                                        std::to_string(m));
        return Multiplicity(m);
    }
    static Multiplicity infinity() { return Multiplicity(0); }

    bool is_finite() const { return m_ != 0; }
    int value() const {
        if (!is_finite()) throw std::domain_error("multiplicity is infinite");
        return m_;
    }
    std::string str() const { return is_finite() ? std::to_string(m_) : "infinity"; }

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) { return a.m_ == b.m_; }

private:
    explicit Multiplicity(int m) : m_(m) {}
    int m_; // 0 encodes infinity
};

// Rank contribution of twist order j in the graded pieces attached to a
// multiplicity-m fiber: floor(j/m) + (0 if m | j else 1). Equals ceil(j/m)
// for finite m; for infinite m it is j itself (pole order).
Int exponent(const Int& j, const Multiplicity& m);

// exponent(j) + exponent(k) - exponent(j+k); subadditivity makes this >= 0.
Int mult_defect(const Int& j, const Int& k, const Multiplicity& m);

// h0 of the n-th power of the canonical bundle on a smooth curve of genus
// g >= 2: 0 for n < 0, 1 for n = 0, g for n = 1, (2n-1)(g-1) for n >= 2.
Int h0_canonical_power(const Int& n, const Int& g);

// Upper bounds for the sections coming from the quotient filtration, for a
// genus-g multiple fiber of multiplicity m, at symmetric degree N = q*m.
// The exact variant sums true h0 values over the graded pieces; the other
// uses the uniform (2n-1)(g-1) estimate everywhere.
Int quotient_bound_exact(long long q, int m, const Int& g);
Int quotient_bound_paper(long long q, int m, const Int& g);

// The two small-twist graded pieces (n = 0 and n = 1) contribute g+1 per
// unit of filtration weight beyond the uniform estimate; q(g+1) in total.
Int small_exponent_correction(long long q, const Int& g);

// Dense univariate polynomial with exact rational coefficients, ascending
// order. Used for the closed forms of the bounds above and for the Euler
// characteristic of symmetric powers.
class BoundPolynomial {
public:
    BoundPolynomial() = default;
    explicit BoundPolynomial(std::vector<Rat> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    // Exact evaluation that must land on an integer; throws otherwise.
    Int eval_integer(const Int& x) const;

    // p(s*x) as a polynomial in x.
    BoundPolynomial with_argument_scaled(const Int& s) const;

    BoundPolynomial& operator+=(const BoundPolynomial& o);
    BoundPolynomial& operator-=(const BoundPolynomial& o);

    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rat> c_;
};

BoundPolynomial operator+(BoundPolynomial a, const BoundPolynomial& b);
BoundPolynomial operator-(BoundPolynomial a, const BoundPolynomial& b);

// Closed forms agreeing with the direct summations at every integer q >= 1.
// exact: (g-1)[m^2 q(q+1)(q+2)/3 - m(m+2) q(q+1)/2] + q(g+1)
// paper: (g-1)[m^2 q(q+1)(q+2)/3 - m q(q+1)/2]
BoundPolynomial quotient_bound_exact_poly(int m, const Int& g);
BoundPolynomial quotient_bound_paper_poly(int m, const Int& g);

// Geometric hypotheses that live outside the lattice; callers assert them
// and the assertions travel with every certificate.
struct OrbifoldAssumptions {
    bool d_smooth_irreducible = false;
    bool o_d_of_d_trivial = false;
    bool kappa_b_is_one = false;
};

// Surface with a marked curve carrying a multiplicity. The genus is derived
// from adjunction at construction and must be an integer.
struct OrbifoldPair {
    SurfaceModel b;
    DivisorClass d;
    Multiplicity m;
    OrbifoldAssumptions assume;
    Int g;
};

OrbifoldPair make_orbifold_pair(SurfaceModel b, DivisorClass d, Multiplicity m,
                                OrbifoldAssumptions assume);

// Chern data of the logarithmic cotangent sheaf along D, valid when the
// normal bundle of D is numerically trivial:
//   e1 = K + D, e1_sq = e1.e1, e2 = c2 + K.D, difference = e1_sq - e2.
struct LogChernNumbers {
    Int e1_sq;
    Int e2;
    Int difference;
};

LogChernNumbers log_chern(const OrbifoldPair& p);

// (c1_sq - c2)(B) + (1 - 1/m) K.D, the weighted discrepancy whose sign
// drives the growth of the section lower bound. Finite m only.
Rat alpha(const OrbifoldPair& p);

// Euler characteristic of the N-th symmetric power of a rank-2 sheaf with
// the given Chern data, as an exact polynomial in N (degree 3, constant
// term chi_o, leading coefficient (e1_sq - e2)/6).
BoundPolynomial chi_sym_rank2(const Rat& chi_o, const Int& e1_sq, const Int& e2,
                              const Int& k_dot_e1);

// Same for the rank-2 log sheaf of the pair: e1 = K + D, e2 = c2 + K.D.
BoundPolynomial chi_sym_log(const OrbifoldPair& p);

// chi(Sym^N E) - chi(Sym^N E tensor A^{-1}), quadratic in N:
//   (N(N+1)/2)(e1.A) - (N+1)(A.A + K.A)/2.
BoundPolynomial twist_penalty_poly(const OrbifoldPair& p, const DivisorClass& a);

// Certified integer lower bound for the number of independent sections of
// the q*m-th symmetric power (minus the trivial 1 + g block and the
// quotient contributions), as a polynomial in q together with every piece
// it was assembled from.
struct SectionBound {
    BoundPolynomial chi_in_n;
    BoundPolynomial penalty_in_n; // zero when no twist was given
    BoundPolynomial quotient_in_q;
    BoundPolynomial lb_in_q;
    Rat alpha;
    Rat cubic_coeff; // always alpha * m^3 / 6
    std::optional<DivisorClass> twist;
    std::vector<std::string> assumptions;

    Int lower_bound_at(long long q) const;
    // Smallest q in [1, q_max] with a strictly positive bound.
    std::optional<long long> threshold(long long q_max) const;
};

SectionBound section_bound(const OrbifoldPair& p,
                           const std::optional<DivisorClass>& twist = std::nullopt);

Int section_lower_bound(const OrbifoldPair& p, long long q,
                        const std::optional<DivisorClass>& twist = std::nullopt);

std::optional<long long> threshold(const OrbifoldPair& p, long long q_max,
                                   const std::optional<DivisorClass>& twist = std::nullopt);

} // namespace orbsurf
