#include "orbsurf/orbdiff.hpp"

#include <sstream>

namespace orbsurf {

Int exponent(const Int& j, const Multiplicity& m) {
    if (j < 0)
        throw std::invalid_argument("exponent: twist order must be >= 0, got " + to_string(j));
    if (!m.is_finite()) return j;
    const Int mm = m.value();
    Int floor = j / mm;
    return j % mm == 0 ? floor : floor + 1;
}

Int mult_defect(const Int& j, const Int& k, const Multiplicity& m) {
    return exponent(j, m) + exponent(k, m) - exponent(j + k, m);
}

Int h0_canonical_power(const Int& n, const Int& g) {
    if (g < 2)
        throw std::domain_error("h0_canonical_power needs genus >= 2, got " + to_string(g));
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (n == 1) return g;
    return (2 * n - 1) * (g - 1);
}

namespace {

void check_bound_domain(long long q, int m, const Int& g) {
    if (q < 1)
        throw std::invalid_argument("quotient bound needs q >= 1, got " + std::to_string(q));
    if (m < 2)
        throw std::invalid_argument("quotient bound needs multiplicity >= 2, got " +
                                    std::to_string(m));
    if (g < 2)
        throw std::domain_error("quotient bound needs genus >= 2, got " + to_string(g));
}

} // namespace

Int quotient_bound_exact(long long q, int m, const Int& g) {
    check_bound_domain(q, m, g);
    Int total = 0;
    for (long long h = 1; h <= q; ++h) {
        Int inner = 0;
        for (int k = 1; k <= m; ++k)
            inner += h0_canonical_power(Int(q - h + 1) * m - k, g);
        total += Int(h) * inner;
    }
    return total;
}

Int quotient_bound_paper(long long q, int m, const Int& g) {
    check_bound_domain(q, m, g);
    Int total = 0;
    for (long long h = 1; h <= q; ++h)
        total += Int(m) * h * (2 * Int(q - h + 1) * m - 1) * (g - 1);
    return total;
}

Int small_exponent_correction(long long q, const Int& g) {
    if (q < 1)
        throw std::invalid_argument("correction needs q >= 1, got " + std::to_string(q));
    return Int(q) * (g + 1);
}

BoundPolynomial::BoundPolynomial(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

void BoundPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat BoundPolynomial::coeff(int i) const {
    if (i < 0) throw std::out_of_range("negative coefficient index");
    if (i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat BoundPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int BoundPolynomial::eval_integer(const Int& x) const {
    Rat v = eval(Rat(x));
    if (!is_integer(v))
        throw std::domain_error("polynomial value at " + to_string(x) +
                                " is not an integer: " + to_string(v));
    return numerator(v);
}

BoundPolynomial BoundPolynomial::with_argument_scaled(const Int& s) const {
    std::vector<Rat> out(c_.size());
    Rat power = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i] = c_[i] * power;
        power *= Rat(s);
    }
    return BoundPolynomial(std::move(out));
}

BoundPolynomial& BoundPolynomial::operator+=(const BoundPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BoundPolynomial& BoundPolynomial::operator-=(const BoundPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BoundPolynomial operator+(BoundPolynomial a, const BoundPolynomial& b) { return a += b; }
BoundPolynomial operator-(BoundPolynomial a, const BoundPolynomial& b) { return a -= b; }

std::string BoundPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat mag = c < 0 ? Rat(-c) : c;
        if (i == 0 || mag != 1) out << to_string(mag);
        if (i > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

BoundPolynomial quotient_bound_exact_poly(int m, const Int& g) {
    if (m < 2)
        throw std::invalid_argument("quotient bound needs multiplicity >= 2, got " +
                                    std::to_string(m));
    if (g < 2)
        throw std::domain_error("quotient bound needs genus >= 2, got " + to_string(g));
    const Rat gm1(g - 1), msq(Int(m) * m), half(Int(m) * (m + 2), 2);
    return BoundPolynomial({Rat(0),
                            gm1 * (Rat(2) * msq / 3 - half) + Rat(g + 1),
                            gm1 * (msq - half),
                            gm1 * msq / 3});
}

BoundPolynomial quotient_bound_paper_poly(int m, const Int& g) {
    if (m < 2)
        throw std::invalid_argument("quotient bound needs multiplicity >= 2, got " +
                                    std::to_string(m));
    if (g < 2)
        throw std::domain_error("quotient bound needs genus >= 2, got " + to_string(g));
    const Rat gm1(g - 1), msq(Int(m) * m), half(Int(m), 2);
    return BoundPolynomial({Rat(0),
                            gm1 * (Rat(2) * msq / 3 - half),
                            gm1 * (msq - half),
                            gm1 * msq / 3});
}

OrbifoldPair make_orbifold_pair(SurfaceModel b, DivisorClass d, Multiplicity m,
                                OrbifoldAssumptions assume) {
    Rat g = b.genus_of(d);
    if (!is_integer(g))
        throw std::domain_error("marked curve on '" + b.name() +
                                "' has non-integer adjunction genus " + to_string(g));
    if (assume.o_d_of_d_trivial && b.self_intersection(d) != 0)
        throw std::domain_error("O_D(D) asserted trivial but D.D = " +
                                to_string(b.self_intersection(d)) + " on '" + b.name() + "'");
    Int gi = numerator(g);
    return OrbifoldPair{std::move(b), std::move(d), m, assume, std::move(gi)};
}

LogChernNumbers log_chern(const OrbifoldPair& p) {
    const Int dd = p.b.self_intersection(p.d);
    if (dd != 0)
        throw std::domain_error("trivial normal bundle required: D.D = " + to_string(dd) +
                                " on '" + p.b.name() + "'");
    const Int kd = p.b.intersect(p.b.canonical(), p.d);
    LogChernNumbers r;
    r.e1_sq = p.b.c1_sq() + 2 * kd;
    r.e2 = p.b.c2() + kd;
    r.difference = r.e1_sq - r.e2;
    return r;
}

Rat alpha(const OrbifoldPair& p) {
    if (!p.m.is_finite())
        throw std::domain_error("alpha needs a finite multiplicity");
    const Int kd = p.b.intersect(p.b.canonical(), p.d);
    return Rat(p.b.c1_sq() - p.b.c2()) + (Rat(1) - Rat(1, p.m.value())) * Rat(kd);
}

BoundPolynomial chi_sym_rank2(const Rat& chi_o, const Int& e1_sq, const Int& e2,
                              const Int& k_dot_e1) {
    // chi(Sym^N) = A*N(N+1)(2N+1) + B*N(N+1)(N-1) + C*N(N+1) + chi_o*(N+1)
    // with A = (e1^2 - 2 e2)/12, B = e2/6, C = -(K.e1)/4.
    const Rat a(Int(e1_sq - 2 * e2), Int(12));
    const Rat b(e2, Int(6));
    const Rat c(Int(-k_dot_e1), Int(4));
    return BoundPolynomial({chi_o,
                            a - b + c + chi_o,
                            Rat(3) * a + c,
                            Rat(2) * a + b});
}

BoundPolynomial chi_sym_log(const OrbifoldPair& p) {
    LogChernNumbers lc = log_chern(p);
    const Int kd = p.b.intersect(p.b.canonical(), p.d);
    const Int k_dot_e1 = p.b.c1_sq() + kd;
    return chi_sym_rank2(p.b.chi_O(), lc.e1_sq, lc.e2, k_dot_e1);
}

BoundPolynomial twist_penalty_poly(const OrbifoldPair& p, const DivisorClass& a) {
    log_chern(p); // validates D.D = 0, which the e1 = K + D reading relies on
    const Int e1_dot_a =
        p.b.intersect(p.b.canonical() + p.d, a);
    const Int aa = p.b.self_intersection(a);
    const Int ka = p.b.intersect(p.b.canonical(), a);
    const Rat s(e1_dot_a, 2);
    const Rat t(aa + ka, 2);
    // (N(N+1)/2) e1.A - (N+1)(A.A + K.A)/2
    return BoundPolynomial({-t, s - t, s});
}

SectionBound section_bound(const OrbifoldPair& p, const std::optional<DivisorClass>& twist) {
    std::vector<std::string> unmet;
    if (!p.m.is_finite()) unmet.push_back("finite multiplicity required");
    if (!p.assume.d_smooth_irreducible) unmet.push_back("D smooth irreducible not asserted");
    if (!p.assume.o_d_of_d_trivial) unmet.push_back("O_D(D) trivial not asserted");
    if (!p.assume.kappa_b_is_one) unmet.push_back("Kodaira dimension 1 not asserted");
    if (p.g < 2) unmet.push_back("genus of D must be >= 2, got " + to_string(p.g));
    if (!unmet.empty()) {
        std::string msg = "section bound hypotheses unmet:";
        for (const auto& u : unmet) msg += " [" + u + "]";
        throw std::domain_error(msg);
    }

    const int m = p.m.value();
    SectionBound out;
    out.chi_in_n = chi_sym_log(p);
    out.penalty_in_n = twist ? twist_penalty_poly(p, *twist) : BoundPolynomial();
    out.quotient_in_q = quotient_bound_exact_poly(m, p.g);
    out.alpha = alpha(p);
    out.twist = twist;

    BoundPolynomial lb = out.chi_in_n.with_argument_scaled(m);
    lb -= out.penalty_in_n.with_argument_scaled(m);
    lb -= BoundPolynomial({Rat(1 + p.g)});
    lb -= out.quotient_in_q;
    out.lb_in_q = std::move(lb);
    out.cubic_coeff = out.alpha * Rat(Int(m) * m * m, 6);
    if (out.lb_in_q.coeff(3) != out.cubic_coeff)
        throw std::logic_error("cubic coefficient drifted from alpha*m^3/6");

    out.assumptions = {
        "D smooth irreducible (asserted by caller)",
        "O_D(D) trivial (asserted by caller)",
        "Kodaira dimension of the surface is 1 (asserted by caller)",
        "h2 of the relevant symmetric powers bounded by 1 + g",
        "quotient contribution bounded with exact graded ranks",
    };
    if (twist)
        out.assumptions.push_back("twisted h2 assumed to obey the same 1 + g bound");
    return out;
}

Int SectionBound::lower_bound_at(long long q) const {
    if (q < 1)
        throw std::invalid_argument("lower bound defined for q >= 1, got " + std::to_string(q));
    return lb_in_q.eval_integer(Int(q));
}

std::optional<long long> SectionBound::threshold(long long q_max) const {
    for (long long q = 1; q <= q_max; ++q)
        if (lower_bound_at(q) > 0) return q;
    return std::nullopt;
}

Int section_lower_bound(const OrbifoldPair& p, long long q,
                        const std::optional<DivisorClass>& twist) {
    return section_bound(p, twist).lower_bound_at(q);
}

std::optional<long long> threshold(const OrbifoldPair& p, long long q_max,
                                   const std::optional<DivisorClass>& twist) {
    return section_bound(p, twist).threshold(q_max);
}

} // namespace orbsurf
