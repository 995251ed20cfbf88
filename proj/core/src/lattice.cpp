#include "orbsurf/lattice.hpp"

#include <regex>
#include <utility>

namespace orbsurf {

bool DivisorClass::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("divisor class rank mismatch in addition");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (coeffs.size() != o.coeffs.size())
        throw std::invalid_argument("divisor class rank mismatch in subtraction");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Int& s) {
    for (auto& c : coeffs) c *= s;
    return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
DivisorClass operator*(const Int& s, DivisorClass a) { return a *= s; }
DivisorClass operator-(DivisorClass a) { return a *= Int(-1); }
bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coeffs == b.coeffs; }

SurfaceModel::SurfaceModel(std::string name,
                           std::vector<std::string> basis_labels,
                           std::vector<std::vector<Int>> gram,
                           DivisorClass canonical,
                           Int c2)
    : name_(std::move(name)),
      basis_(std::move(basis_labels)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      c2_(std::move(c2)) {
    const std::size_t r = basis_.size();
    if (r == 0)
        throw std::invalid_argument("surface '" + name_ + "': empty basis");
    if (gram_.size() != r)
        throw std::invalid_argument("surface '" + name_ + "': gram has " +
                                    std::to_string(gram_.size()) + " rows, basis has " +
                                    std::to_string(r) + " labels");
    for (const auto& row : gram_)
        if (row.size() != r)
            throw std::invalid_argument("surface '" + name_ + "': gram is not square");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("surface '" + name_ + "': gram not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    check_class(canonical_, "canonical class");

    nonzero_.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (gram_[i][j] != 0)
                nonzero_.push_back({static_cast<int>(i), static_cast<int>(j), gram_[i][j]});

    c1_sq_ = intersect(canonical_, canonical_);
}

void SurfaceModel::check_class(const DivisorClass& c, const char* role) const {
    if (c.rank() != rank())
        throw std::invalid_argument(std::string(role) + " has " + std::to_string(c.rank()) +
                                    " coefficients but lattice '" + name_ + "' has rank " +
                                    std::to_string(rank()));
}

Int SurfaceModel::intersect(const DivisorClass& x, const DivisorClass& y) const {
    check_class(x, "left class");
    check_class(y, "right class");
    Int acc = 0;
    for (const auto& e : nonzero_) {
        const Int& xi = x.coeffs[static_cast<std::size_t>(e.i)];
        if (xi == 0) continue;
        const Int& yj = y.coeffs[static_cast<std::size_t>(e.j)];
        if (yj == 0) continue;
        acc += xi * e.g * yj;
    }
    return acc;
}

Rat SurfaceModel::chi_O() const { return Rat(c1_sq_ + c2_, 12); }

Int SurfaceModel::chi_O_integer() const {
    Rat chi = chi_O();
    if (!is_integer(chi))
        throw std::domain_error("surface '" + name_ + "': c1^2 + c2 = " +
                                to_string(Int(c1_sq_ + c2_)) + " is not divisible by 12");
    return numerator(chi);
}

Rat SurfaceModel::genus_of(const DivisorClass& d) const {
    check_class(d, "divisor class");
    Int dd = intersect(d, d);
    Int kd = intersect(canonical_, d);
    return Rat(1) + Rat(dd + kd, 2);
}

DivisorClass SurfaceModel::basis_class(int i) const {
    if (i < 0 || i >= rank())
        throw std::out_of_range("basis index " + std::to_string(i) + " out of range for '" +
                                name_ + "'");
    DivisorClass c = DivisorClass::zero(rank());
    c.coeffs[static_cast<std::size_t>(i)] = 1;
    return c;
}

SurfaceModel projective_plane() {
    return SurfaceModel("P2", {"H"}, {{Int(1)}}, DivisorClass{Int(-3)}, Int(3));
}

SurfaceModel quadric_surface() {
    return SurfaceModel("P1xP1", {"f1", "f2"},
                        {{Int(0), Int(1)}, {Int(1), Int(0)}},
                        DivisorClass{Int(-2), Int(-2)}, Int(4));
}

DivisorClass Blowup::pullback(const DivisorClass& c) const {
    if (c.rank() != base_rank_)
        throw std::invalid_argument("pullback expects rank " + std::to_string(base_rank_) +
                                    " class for '" + surface_.name() + "', got rank " +
                                    std::to_string(c.rank()));
    DivisorClass out = c;
    out.coeffs.resize(static_cast<std::size_t>(base_rank_ + points_));
    return out;
}

DivisorClass Blowup::exceptional(int i) const {
    if (i < 0 || i >= points_)
        throw std::out_of_range("exceptional index " + std::to_string(i) + " out of range (" +
                                std::to_string(points_) + " points)");
    return surface_.basis_class(base_rank_ + i);
}

DivisorClass Blowup::exceptional_sum() const {
    DivisorClass s = DivisorClass::zero(surface_.rank());
    for (int i = 0; i < points_; ++i)
        s.coeffs[static_cast<std::size_t>(base_rank_ + i)] = 1;
    return s;
}

Blowup blow_up(const SurfaceModel& s, int n) {
    if (n < 0)
        throw std::invalid_argument("cannot blow up " + std::to_string(n) + " points");
    const int r0 = s.rank();
    const int r = r0 + n;

    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(r),
                                       std::vector<Int>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r0; ++j)
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                s.gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = r0; i < r; ++i)
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;

    // Continue any existing E<k> numbering so iterated blowups stay readable.
    int start = 1;
    static const std::regex exc_label("^E([0-9]+)$");
    for (const auto& label : s.basis_labels()) {
        std::smatch m;
        if (std::regex_match(label, m, exc_label)) {
            int idx = std::stoi(m[1].str());
            if (idx + 1 > start) start = idx + 1;
        }
    }

    std::vector<std::string> labels = s.basis_labels();
    labels.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < n; ++i) labels.push_back("E" + std::to_string(start + i));

    DivisorClass k = s.canonical();
    k.coeffs.resize(static_cast<std::size_t>(r));
    for (int i = r0; i < r; ++i) k.coeffs[static_cast<std::size_t>(i)] = 1;

    std::string name = n == 0 ? s.name() : s.name() + "+" + std::to_string(n) + "pts";
    SurfaceModel out(std::move(name), std::move(labels), std::move(gram), std::move(k),
                     s.c2() + n);
    return Blowup(std::move(out), r0, n);
}

} // namespace orbsurf
