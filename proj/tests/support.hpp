#pragma once

#include "orbsurf/lattice.hpp"

#include <random>
#include <vector>

// Test-side reference implementations and generators. Everything here is
// intentionally written against the plain definitions, not against the
// library's internals, so disagreements point at real bugs.
namespace testsupport {

using orbsurf::DivisorClass;
using orbsurf::Int;
using orbsurf::Rat;
using orbsurf::SurfaceModel;

using Rng = std::mt19937_64;

inline long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Dense double loop straight off the definition of the pairing.
inline Int pair_reference(const std::vector<std::vector<Int>>& gram, const DivisorClass& x,
                          const DivisorClass& y) {
    Int acc = 0;
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j)
            acc += x.coeffs[i] * gram[i][j] * y.coeffs[j];
    return acc;
}

inline SurfaceModel random_surface(Rng& rng, int max_rank = 5, long long entry_bound = 6) {
    int r = static_cast<int>(pick(rng, 1, max_rank));
    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(r),
                                       std::vector<Int>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Int v = pick(rng, -entry_bound, entry_bound);
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    DivisorClass k = DivisorClass::zero(r);
    for (auto& c : k.coeffs) c = pick(rng, -5, 5);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) labels.push_back("v" + std::to_string(i));
    return SurfaceModel("random", std::move(labels), std::move(gram), std::move(k),
                        Int(pick(rng, -30, 90)));
}

inline DivisorClass random_class(Rng& rng, int rank, long long bound = 9) {
    DivisorClass d = DivisorClass::zero(rank);
    for (auto& c : d.coeffs) c = pick(rng, -bound, bound);
    return d;
}

} // namespace testsupport
