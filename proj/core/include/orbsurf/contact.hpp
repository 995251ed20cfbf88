#pragma once

#include "orbsurf/numeric.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbsurf {

// Formal power series known exactly below a truncation order T; the tail
// from degree T on is unknown, not zero. Every operation preserves that
// distinction, which is what makes "indeterminate" answers honest.
class PowerSeries {
public:
    // coeffs may be shorter than T (padded with zeros), never longer.
    PowerSeries(std::vector<Rat> coeffs, int truncation);
    static PowerSeries zero(int truncation);

    int truncation() const { return trunc_; }
    const Rat& coeff(int i) const;

    // Smallest degree with nonzero coefficient; nullopt when every known
    // coefficient vanishes (order >= T or identically zero, which the
    // truncated data cannot distinguish).
    std::optional<int> order() const;

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries pow(int e) const; // e >= 0, honest repeated multiplication

    // f.compose(g) = f(g(t)); g must have zero constant term so the
    // truncated result is well defined.
    PowerSeries compose(const PowerSeries& inner) const;

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

private:
    std::vector<Rat> c_; // size == trunc_
    int trunc_;
};

// Parametrized disc germ t -> (x(t), y(t)). Only single-branch germs with
// a regular parameter are modeled; Puiseux expansions are out of scope.
struct CurveGerm {
    PowerSeries x;
    PowerSeries y;
};

// Validates matching truncations.
CurveGerm make_germ(PowerSeries x, PowerSeries y);

// Polynomial in two variables with exact rational coefficients, used as a
// local equation of a divisor.
class TwoVarPoly {
public:
    TwoVarPoly() = default;

    void set(int deg_x, int deg_y, Rat c);
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    PowerSeries eval(const CurveGerm& g) const;

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

// Vanishing order of f along the germ; nullopt when the truncated data
// cannot exhibit a nonzero coefficient. Throws on the zero polynomial.
std::optional<int> contact_order(const CurveGerm& h, const TwoVarPoly& f);

enum class Tri { yes, no, indeterminate };
std::string to_string(Tri t);

enum class TangencyMode { classical, nonclassical };
std::string to_string(TangencyMode mode);
TangencyMode tangency_mode_from_string(const std::string& s);

struct ContactRecord {
    std::optional<int> order;
    int truncation = 0;
    int m = 2;
    // order divisible by m / order zero or at least m; both indeterminate
    // whenever the order is.
    Tri classical = Tri::indeterminate;
    Tri nonclassical = Tri::indeterminate;
};

ContactRecord is_m_tangent(const CurveGerm& h, const TwoVarPoly& f, int m);

// Local model of a multiplicity-m fiber: p(u, w) = (u, w^m), divisor y = 0
// downstairs, w = 0 upstairs. Certifies ord(y-component of p(germ)) equal
// to m * ord(w-component), with the left side computed by honest series
// exponentiation. Indeterminate whenever either side is not visible below
// the truncation; never a false pass.
Tri fibration_pullback_check(const CurveGerm& h, int m);

} // namespace orbsurf
