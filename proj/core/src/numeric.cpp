#include "orbsurf/numeric.hpp"

namespace orbsurf {

namespace {

bool valid_decimal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Int parse_integer(std::string_view text) {
    if (!valid_decimal(text))
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    return Int(std::string(text));
}

Rat parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text));
    Int num = parse_integer(text.substr(0, slash));
    Int den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

} // namespace orbsurf
