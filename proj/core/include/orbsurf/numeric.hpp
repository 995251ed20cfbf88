#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbsurf {

// Exact arithmetic everywhere: no floating point enters any invariant.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Throws if r is not an integer; callers use this to surface bogus
// half-integer results instead of rounding them away.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("expected integer value, got " + r.str());
    return numerator(r);
}

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical form "p" or "p/q" with q > 0 and gcd(p,q) = 1.
// cpp_rational keeps its operands canonical, so printing is direct.
inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Int parse_integer(std::string_view text);
Rat parse_rational(std::string_view text);

} // namespace orbsurf
