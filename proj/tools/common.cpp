#include "common.hpp"

#include "orbsurf/version.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace orbsurf::cli {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

DoubleCover parse_b0_spec(const std::string& spec) {
    if (spec.rfind("b0:", 0) != 0)
        throw std::invalid_argument("not a b0 spec: '" + spec + "'");
    std::istringstream in(spec.substr(3));
    long long k = 0, a = 0, b = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> k >> c1 >> a >> c2 >> b) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw std::invalid_argument("malformed surface spec '" + spec + "' (expected b0:k,a,b)");
    return double_cover_quadric(k, a, b);
}

SurfaceModel load_surface(const std::string& spec) {
    if (spec == "p2") return projective_plane();
    if (spec == "p1xp1" || spec == "quadric") return quadric_surface();
    if (spec.rfind("b0:", 0) == 0) return parse_b0_spec(spec).surface;
    return surface_from_json(read_json_file(spec));
}

DivisorClass parse_class(const std::string& text) {
    DivisorClass d;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) d.coeffs.push_back(parse_integer(tok));
    if (d.coeffs.empty())
        throw std::invalid_argument("empty divisor class '" + text + "'");
    return d;
}

SearchRange parse_range(const std::string& text) {
    static const std::regex re(R"(^(-?[0-9]+)(?:\.\.(-?[0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw std::invalid_argument("malformed range '" + text + "' (expected lo..hi)");
    try {
        long long lo = std::stoll(m[1].str());
        long long hi = m[2].matched ? std::stoll(m[2].str()) : lo;
        return SearchRange{lo, hi};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range endpoint out of machine bounds in '" + text + "'");
    }
}

Json envelope(const std::string& command, Json inputs, Json result) {
    Json out;
    out["tool"] = "orbsurf";
    out["version"] = orbsurf::version;
    out["command"] = command;
    out["inputs"] = std::move(inputs);
    out["result"] = std::move(result);
    return out;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

} // namespace orbsurf::cli
