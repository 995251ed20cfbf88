#include "orbsurf/serialize.hpp"

#include <limits>

namespace orbsurf {

namespace {

const Int kInt64Min = std::numeric_limits<long long>::min();
const Int kInt64Max = std::numeric_limits<long long>::max();

} // namespace

Json json_int(const Int& v) {
    if (v >= kInt64Min && v <= kInt64Max) return v.convert_to<long long>();
    return to_string(v);
}

Json json_rat(const Rat& v) { return to_string(v); }

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw std::invalid_argument("expected integer (number or decimal string), got " + j.dump());
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected rational (integer or \"p/q\" string), got " + j.dump());
}

Json to_json(const DivisorClass& d) {
    Json out = Json::array();
    for (const auto& c : d.coeffs) out.push_back(json_int(c));
    return out;
}

DivisorClass divisor_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("divisor class must be an array");
    DivisorClass d;
    d.coeffs.reserve(j.size());
    for (const auto& c : j) d.coeffs.push_back(int_from_json(c));
    return d;
}

Json to_json(const SurfaceModel& s) {
    Json gram = Json::array();
    for (const auto& row : s.gram()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(json_int(v));
        gram.push_back(std::move(r));
    }
    Json out;
    out["name"] = s.name();
    out["basis"] = s.basis_labels();
    out["gram"] = std::move(gram);
    out["canonical"] = to_json(s.canonical());
    out["c1_sq"] = json_int(s.c1_sq());
    out["c2"] = json_int(s.c2());
    return out;
}

SurfaceModel surface_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("surface must be a JSON object");
    for (const char* key : {"basis", "gram", "canonical", "c2"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("surface is missing '") + key + "'");

    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    const Json& jg = j.at("gram");
    if (!jg.is_array()) throw std::invalid_argument("gram must be an array of arrays");
    std::vector<std::vector<Int>> gram;
    gram.reserve(jg.size());
    for (const auto& row : jg) {
        if (!row.is_array()) throw std::invalid_argument("gram must be an array of arrays");
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(int_from_json(v));
        gram.push_back(std::move(r));
    }

    std::string name = j.value("name", std::string("unnamed"));
    SurfaceModel s(std::move(name), std::move(basis), std::move(gram),
                   divisor_from_json(j.at("canonical")), int_from_json(j.at("c2")));
    if (j.contains("c1_sq")) {
        Int declared = int_from_json(j.at("c1_sq"));
        if (declared != s.c1_sq())
            throw std::invalid_argument("surface '" + s.name() + "': declared c1_sq " +
                                        to_string(declared) + " but lattice gives " +
                                        to_string(s.c1_sq()));
    }
    return s;
}

Json to_json(const CoverResult& r) {
    Json out;
    out["m"] = r.m;
    out["c1_sq"] = json_int(r.c1_sq);
    out["c2"] = json_int(r.c2);
    out["diff"] = json_int(r.difference);
    out["assumptions"] = r.assumptions;
    return out;
}

Json to_json(const P1P2Record& r) {
    Json out;
    out["p1"] = r.p1;
    out["p2"] = r.p2;
    out["p2_threshold"] = r.p2_threshold ? json_rat(*r.p2_threshold) : Json(nullptr);
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

Json to_json(const BTCertificate& c) {
    Json out;
    out["k"] = c.k;
    out["a"] = c.a;
    out["b"] = c.b;
    out["m"] = c.m;
    out["mode"] = to_string(c.mode);
    out["n_points"] = json_int(c.n_points);
    out["d_sq"] = json_int(c.d_sq);
    out["k_dot_d"] = json_int(c.k_dot_d);
    out["g_d"] = json_int(c.g_d);
    out["c1_sq_b"] = json_int(c.c1_sq_b);
    out["c2_b"] = json_int(c.c2_b);
    out["c1sq_minus_c2_b"] = json_int(c.c1sq_minus_c2_b);
    out["alpha"] = json_rat(c.alpha);
    out["p1p2"] = to_json(c.p1p2);
    out["cover"] = c.cover ? to_json(*c.cover) : Json(nullptr);
    Json checks;
    checks["p1"] = c.checks.p1;
    checks["p2_exact"] = c.checks.p2_exact;
    checks["p2_paper_display"] = c.checks.p2_paper_display;
    checks["bt5_divisibility"] = c.checks.bt5_divisibility;
    checks["bt6_cover_positive"] = c.checks.bt6_cover_positive;
    checks["alpha_positive"] = c.checks.alpha_positive;
    checks["all"] = c.checks.all();
    out["checks"] = std::move(checks);
    out["assumptions"] = c.assumptions;
    return out;
}

Json to_json(const P2Disagreement& d) {
    Json out;
    out["k"] = d.k;
    out["a"] = d.a;
    out["b"] = d.b;
    out["m"] = d.m;
    out["p2_exact"] = d.p2_exact;
    out["p2_paper_display"] = d.p2_paper_display;
    return out;
}

Json to_json(const SearchOutcome& o) {
    Json out;
    out["cells"] = o.cells;
    Json certified = Json::array();
    for (const auto& c : o.certified) certified.push_back(to_json(c));
    out["certified"] = std::move(certified);
    Json dis = Json::array();
    for (const auto& d : o.p2_disagreements) dis.push_back(to_json(d));
    out["p2_display_vs_exact"] = std::move(dis);
    return out;
}

Json to_json(const LogChernNumbers& n) {
    Json out;
    out["e1_sq"] = json_int(n.e1_sq);
    out["e2"] = json_int(n.e2);
    out["diff"] = json_int(n.difference);
    return out;
}

Json to_json(const BoundPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(json_rat(c));
    Json out;
    out["degree"] = p.degree();
    out["coeffs_ascending"] = std::move(coeffs);
    return out;
}

Json to_json(const ContactRecord& r) {
    Json out;
    out["order"] = r.order ? Json(*r.order) : Json(nullptr);
    out["order_known"] = r.order.has_value();
    out["truncation"] = r.truncation;
    out["m"] = r.m;
    out["classical"] = to_string(r.classical);
    out["nonclassical"] = to_string(r.nonclassical);
    return out;
}

Json to_json(const TwoVarPoly& f) {
    Json out = Json::object();
    for (const auto& [key, c] : f.terms())
        out[std::to_string(key.first) + "," + std::to_string(key.second)] = json_rat(c);
    return out;
}

TwoVarPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("divisor polynomial must be a JSON object");
    TwoVarPoly f;
    for (const auto& [key, value] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("monomial key '" + key + "' is not of the form \"i,j\"");
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        f.set(i, jj, rat_from_json(value));
    }
    return f;
}

Json to_json(const CurveGerm& g) {
    Json x = Json::array(), y = Json::array();
    for (int i = 0; i < g.x.truncation(); ++i) x.push_back(json_rat(g.x.coeff(i)));
    for (int i = 0; i < g.y.truncation(); ++i) y.push_back(json_rat(g.y.coeff(i)));
    Json out;
    out["x"] = std::move(x);
    out["y"] = std::move(y);
    out["T"] = g.x.truncation();
    return out;
}

CurveGerm germ_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("germ must be a JSON object");
    for (const char* key : {"x", "y", "T"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("germ is missing '") + key + "'");
    int t = j.at("T").get<int>();
    auto series = [&](const char* key) {
        const Json& arr = j.at(key);
        if (!arr.is_array())
            throw std::invalid_argument(std::string("germ '") + key + "' must be an array");
        std::vector<Rat> coeffs;
        coeffs.reserve(arr.size());
        for (const auto& c : arr) coeffs.push_back(rat_from_json(c));
        return PowerSeries(std::move(coeffs), t);
    };
    return make_germ(series("x"), series("y"));
}

Json certificate_json(const SectionBound& sb, std::optional<long long> threshold_q,
                      long long q_max) {
    Json out;
    out["alpha"] = json_rat(sb.alpha);
    out["leading_coeff"] = json_rat(sb.cubic_coeff);
    out["threshold"] = threshold_q ? Json(*threshold_q) : Json(nullptr);
    out["q_max"] = q_max;
    out["lb_poly"] = to_json(sb.lb_in_q);
    out["chi_poly_in_n"] = to_json(sb.chi_in_n);
    out["quotient_poly_in_q"] = to_json(sb.quotient_in_q);
    out["twist"] = sb.twist ? to_json(*sb.twist) : Json(nullptr);
    out["twist_penalty_in_n"] = to_json(sb.penalty_in_n);
    out["assumptions"] = sb.assumptions;
    return out;
}

} // namespace orbsurf
