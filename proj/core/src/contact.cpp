#include "orbsurf/contact.hpp"

#include <algorithm>

namespace orbsurf {

PowerSeries::PowerSeries(std::vector<Rat> coeffs, int truncation)
    : c_(std::move(coeffs)), trunc_(truncation) {
    if (trunc_ < 1)
        throw std::invalid_argument("truncation must be >= 1, got " + std::to_string(trunc_));
    if (static_cast<int>(c_.size()) > trunc_)
        throw std::invalid_argument("series has " + std::to_string(c_.size()) +
                                    " coefficients, more than truncation " +
                                    std::to_string(trunc_));
    c_.resize(static_cast<std::size_t>(trunc_));
}

PowerSeries PowerSeries::zero(int truncation) { return PowerSeries({}, truncation); }

const Rat& PowerSeries::coeff(int i) const {
    if (i < 0 || i >= trunc_)
        throw std::out_of_range("coefficient " + std::to_string(i) +
                                " outside truncation " + std::to_string(trunc_));
    return c_[static_cast<std::size_t>(i)];
}

std::optional<int> PowerSeries::order() const {
    for (int i = 0; i < trunc_; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return i;
    return std::nullopt;
}

namespace {

int common_truncation(const PowerSeries& a, const PowerSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("truncation mismatch: " + std::to_string(a.truncation()) +
                                    " vs " + std::to_string(b.truncation()));
    return a.truncation();
}

} // namespace

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    common_truncation(*this, o);
    for (int i = 0; i < trunc_; ++i)
        c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    common_truncation(*this, o);
    for (int i = 0; i < trunc_; ++i)
        c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int t = common_truncation(a, b);
    std::vector<Rat> out(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        const Rat& ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; i + j < t; ++j) {
            const Rat& bj = b.c_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            out[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return PowerSeries(std::move(out), t);
}

PowerSeries PowerSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series exponent " + std::to_string(e));
    PowerSeries acc({Rat(1)}, trunc_);
    PowerSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    const int t = common_truncation(*this, inner);
    if (inner.c_[0] != 0)
        throw std::invalid_argument("composition needs zero constant term, got " +
                                    to_string(inner.c_[0]));
    PowerSeries acc = PowerSeries::zero(t);
    for (int i = trunc_ - 1; i >= 0; --i) {
        acc = acc * inner;
        acc.c_[0] += c_[static_cast<std::size_t>(i)];
    }
    return acc;
}

CurveGerm make_germ(PowerSeries x, PowerSeries y) {
    common_truncation(x, y);
    return CurveGerm{std::move(x), std::move(y)};
}

void TwoVarPoly::set(int deg_x, int deg_y, Rat c) {
    if (deg_x < 0 || deg_y < 0)
        throw std::invalid_argument("monomial degrees must be >= 0, got (" +
                                    std::to_string(deg_x) + "," + std::to_string(deg_y) + ")");
    if (c == 0)
        terms_.erase({deg_x, deg_y});
    else
        terms_[{deg_x, deg_y}] = std::move(c);
}

PowerSeries TwoVarPoly::eval(const CurveGerm& g) const {
    const int t = common_truncation(g.x, g.y);
    int max_x = 0, max_y = 0;
    for (const auto& [key, c] : terms_) {
        max_x = std::max(max_x, key.first);
        max_y = std::max(max_y, key.second);
    }
    std::vector<PowerSeries> xp, yp;
    xp.reserve(static_cast<std::size_t>(max_x) + 1);
    yp.reserve(static_cast<std::size_t>(max_y) + 1);
    xp.push_back(PowerSeries({Rat(1)}, t));
    yp.push_back(PowerSeries({Rat(1)}, t));
    for (int i = 1; i <= max_x; ++i) xp.push_back(xp.back() * g.x);
    for (int j = 1; j <= max_y; ++j) yp.push_back(yp.back() * g.y);

    PowerSeries acc = PowerSeries::zero(t);
    for (const auto& [key, c] : terms_) {
        PowerSeries term = xp[static_cast<std::size_t>(key.first)] *
                           yp[static_cast<std::size_t>(key.second)];
        acc += term * PowerSeries({c}, t);
    }
    return acc;
}

std::optional<int> contact_order(const CurveGerm& h, const TwoVarPoly& f) {
    if (f.empty())
        throw std::invalid_argument("contact order against the zero polynomial is undefined");
    return f.eval(h).order();
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "indeterminate";
    }
}

std::string to_string(TangencyMode mode) {
    return mode == TangencyMode::classical ? "classical" : "nonclassical";
}

TangencyMode tangency_mode_from_string(const std::string& s) {
    if (s == "classical") return TangencyMode::classical;
    if (s == "nonclassical") return TangencyMode::nonclassical;
    throw std::invalid_argument("unknown tangency mode '" + s +
                                "' (expected classical or nonclassical)");
}

ContactRecord is_m_tangent(const CurveGerm& h, const TwoVarPoly& f, int m) {
    if (m < 2)
        throw std::invalid_argument("tangency multiplicity must be >= 2, got " +
                                    std::to_string(m));
    ContactRecord r;
    r.truncation = common_truncation(h.x, h.y);
    r.m = m;
    r.order = contact_order(h, f);
    if (r.order) {
        r.classical = (*r.order % m == 0) ? Tri::yes : Tri::no;
        r.nonclassical = (*r.order == 0 || *r.order >= m) ? Tri::yes : Tri::no;
    }
    return r;
}

Tri fibration_pullback_check(const CurveGerm& h, int m) {
    if (m < 2)
        throw std::invalid_argument("fiber multiplicity must be >= 2, got " + std::to_string(m));
    std::optional<int> up = h.y.order();
    if (!up) return Tri::indeterminate;
    std::optional<int> down = h.y.pow(m).order();
    if (!down) return Tri::indeterminate;
    return *down == m * *up ? Tri::yes : Tri::no;
}

} // namespace orbsurf
