#include "common.hpp"
#include "verify_suite.hpp"

#include "orbsurf/version.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace orbsurf;
using cli::emit;
using cli::envelope;

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 2;

enum class Format { text, json, csv };

struct FormatFlags {
    bool json = false;
    bool csv = false;
    Format pick() const {
        if (json && csv) throw std::invalid_argument("--json and --csv are exclusive");
        if (json) return Format::json;
        if (csv) return Format::csv;
        return Format::text;
    }
};

void add_format_flags(CLI::App* cmd, FormatFlags& f, bool with_csv = true) {
    cmd->add_flag("--json", f.json, "emit a JSON document");
    if (with_csv) cmd->add_flag("--csv", f.csv, "emit CSV rows");
}

struct SurfaceClassInput {
    SurfaceModel surface;
    DivisorClass cls;
};

// --class may be omitted for b0:k,a,b surfaces, where the pencil class is
// the obvious default.
SurfaceClassInput resolve_surface_class(const std::string& surface_spec,
                                        const std::string& class_spec) {
    if (surface_spec.rfind("b0:", 0) == 0) {
        DoubleCover dc = cli::parse_b0_spec(surface_spec);
        DivisorClass cls = class_spec.empty() ? dc.pencil : cli::parse_class(class_spec);
        return {std::move(dc.surface), std::move(cls)};
    }
    if (class_spec.empty())
        throw std::invalid_argument("--class is required unless --surface is b0:k,a,b");
    return {cli::load_surface(surface_spec), cli::parse_class(class_spec)};
}

// ---- cover -----------------------------------------------------------------

struct CoverArgs {
    std::string surface;
    std::string cls;
    int m = 2;
    FormatFlags fmt;
};

int run_cover(const CoverArgs& args) {
    auto [s, l] = resolve_surface_class(args.surface, args.cls);
    CoverResult r = cyclic_cover_invariants(s, l, args.m);
    switch (args.fmt.pick()) {
        case Format::json: {
            Json inputs;
            inputs["surface"] = args.surface;
            inputs["class"] = to_json(l);
            inputs["m"] = args.m;
            emit(envelope("cover", std::move(inputs), to_json(r)));
            break;
        }
        case Format::csv:
            std::cout << "m,c1_sq,c2,diff\n"
                      << r.m << "," << to_string(r.c1_sq) << "," << to_string(r.c2) << ","
                      << to_string(r.difference) << "\n";
            break;
        case Format::text:
            std::cout << "degree " << r.m << " cyclic cover of " << s.name() << "\n"
                      << "  c1_sq = " << to_string(r.c1_sq) << "\n"
                      << "  c2    = " << to_string(r.c2) << "\n"
                      << "  diff  = " << to_string(r.difference) << "\n";
            for (const auto& a : r.assumptions) std::cout << "  assumes: " << a << "\n";
            break;
    }
    return kExitOk;
}

// ---- p1p2 ------------------------------------------------------------------

struct P1P2Args {
    std::string surface;
    std::string cls;
    int m = 2;
    FormatFlags fmt;
};

int run_p1p2(const P1P2Args& args) {
    auto [s, l] = resolve_surface_class(args.surface, args.cls);
    P1P2Record r = p1p2_check(s, l, args.m);
    std::string threshold = r.p2_threshold ? to_string(*r.p2_threshold) : "";
    switch (args.fmt.pick()) {
        case Format::json: {
            Json inputs;
            inputs["surface"] = args.surface;
            inputs["class"] = to_json(l);
            inputs["m"] = args.m;
            emit(envelope("p1p2", std::move(inputs), to_json(r)));
            break;
        }
        case Format::csv:
            std::cout << "p1,p2,p2_threshold\n"
                      << (r.p1 ? "true" : "false") << "," << (r.p2 ? "true" : "false") << ","
                      << threshold << "\n";
            break;
        case Format::text:
            std::cout << "P1 (K.L > L.L): " << (r.p1 ? "holds" : "fails") << "\n"
                      << "P2 (m above threshold): " << (r.p2 ? "holds" : "fails") << "\n";
            if (r.p2_threshold) std::cout << "  threshold = " << threshold << "\n";
            if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
            break;
    }
    return r.p1 && r.p2 ? kExitOk : kExitChecksFailed;
}

// ---- bt-search ---------------------------------------------------------------

struct SearchArgs {
    std::string k, a, b, m;
    std::string mode = "pencil_class";
    int threads = 0;
    FormatFlags fmt;
};

int run_search(const SearchArgs& args) {
    SearchOutcome out =
        search(cli::parse_range(args.k), cli::parse_range(args.a), cli::parse_range(args.b),
               cli::parse_range(args.m), branch_class_mode_from_string(args.mode), args.threads);
    switch (args.fmt.pick()) {
        case Format::json: {
            Json inputs;
            inputs["k"] = args.k;
            inputs["a"] = args.a;
            inputs["b"] = args.b;
            inputs["m"] = args.m;
            inputs["mode"] = args.mode;
            emit(envelope("bt-search", std::move(inputs), to_json(out)));
            break;
        }
        case Format::csv: {
            std::cout << "k,a,b,m,mode,alpha,g_d,k_dot_d,c1sq_minus_c2_b,cover_diff\n";
            for (const auto& c : out.certified)
                std::cout << c.k << "," << c.a << "," << c.b << "," << c.m << ","
                          << to_string(c.mode) << "," << to_string(c.alpha) << ","
                          << to_string(c.g_d) << "," << to_string(c.k_dot_d) << ","
                          << to_string(c.c1sq_minus_c2_b) << ","
                          << to_string(c.cover->difference) << "\n";
            break;
        }
        case Format::text: {
            std::cout << out.cells << " grid cells, " << out.certified.size()
                      << " certified, " << out.p2_disagreements.size()
                      << " P2 display/exact disagreements\n";
            for (const auto& c : out.certified)
                std::cout << "  (k=" << c.k << ", a=" << c.a << ", b=" << c.b << ", m=" << c.m
                          << ")  alpha = " << to_string(c.alpha) << ", g = " << to_string(c.g_d)
                          << "\n";
            break;
        }
    }
    return out.certified.empty() ? kExitChecksFailed : kExitOk;
}

// ---- bound -------------------------------------------------------------------

struct BoundArgs {
    long long k = 1, a = 1, b = 1;
    int m = 2;
    std::string mode = "pencil_class";
    long long q_max = 100;
    std::string twist;
    FormatFlags fmt;
};

int run_bound(const BoundArgs& args) {
    BTConfig cfg = build_config(args.k, args.a, args.b, args.m,
                                branch_class_mode_from_string(args.mode));
    OrbifoldPair pair = to_orbifold_pair(cfg);
    std::optional<DivisorClass> twist;
    if (!args.twist.empty()) {
        twist = cli::parse_class(args.twist);
        if (twist->rank() != pair.b.rank())
            throw std::invalid_argument("twist class has " + std::to_string(twist->rank()) +
                                        " coefficients but '" + pair.b.name() + "' has rank " +
                                        std::to_string(pair.b.rank()));
    }
    SectionBound sb = section_bound(pair, twist);
    std::optional<long long> thr = sb.threshold(args.q_max);

    const Int mm = args.m;
    switch (args.fmt.pick()) {
        case Format::json: {
            Json inputs;
            inputs["k"] = args.k;
            inputs["a"] = args.a;
            inputs["b"] = args.b;
            inputs["m"] = args.m;
            inputs["mode"] = args.mode;
            inputs["q_max"] = args.q_max;
            inputs["twist"] = twist ? to_json(*twist) : Json(nullptr);
            Json result;
            result["config"] = to_json(cfg.cert);
            result["certificate"] = certificate_json(sb, thr, args.q_max);
            emit(envelope("bound", std::move(inputs), std::move(result)));
            break;
        }
        case Format::csv: {
            std::cout << "q,chi,quotient_exact,twist_penalty,LB\n";
            for (long long q = 1; q <= args.q_max; ++q) {
                Int n = mm * q;
                Int chi = sb.chi_in_n.eval_integer(n);
                Int quot = sb.quotient_in_q.eval_integer(Int(q));
                Int pen = sb.penalty_in_n.eval_integer(n);
                std::cout << q << "," << to_string(chi) << "," << to_string(quot) << ","
                          << to_string(pen) << "," << to_string(sb.lower_bound_at(q)) << "\n";
            }
            break;
        }
        case Format::text: {
            std::cout << "config (k=" << args.k << ", a=" << args.a << ", b=" << args.b
                      << ", m=" << args.m << "), mode " << args.mode << "\n"
                      << "  alpha          = " << to_string(sb.alpha) << "\n"
                      << "  leading coeff  = " << to_string(sb.cubic_coeff) << "\n"
                      << "  LB(q)          = " << sb.lb_in_q.str("q") << "\n";
            if (thr)
                std::cout << "  threshold      = q* = " << *thr << " (LB = "
                          << to_string(sb.lower_bound_at(*thr)) << ")\n";
            else
                std::cout << "  threshold      = none up to q_max = " << args.q_max << "\n";
            for (const auto& a : sb.assumptions) std::cout << "  assumes: " << a << "\n";
            break;
        }
    }
    return thr ? kExitOk : kExitChecksFailed;
}

// ---- tangency ------------------------------------------------------------------

struct TangencyArgs {
    std::string germ;
    std::string divisor;
    int m = 2;
    std::string mode = "classical";
    bool fibration = false;
    FormatFlags fmt;
};

int run_tangency(const TangencyArgs& args) {
    CurveGerm germ = germ_from_json(cli::read_json_file(args.germ));

    if (args.fibration) {
        Tri res = fibration_pullback_check(germ, args.m);
        if (args.fmt.pick() == Format::json) {
            Json inputs;
            inputs["germ"] = args.germ;
            inputs["m"] = args.m;
            inputs["check"] = "fibration_pullback";
            Json result;
            result["m"] = args.m;
            result["result"] = to_string(res);
            result["y_order"] = germ.y.order() ? Json(*germ.y.order()) : Json(nullptr);
            result["truncation"] = germ.y.truncation();
            emit(envelope("tangency", std::move(inputs), std::move(result)));
        } else {
            std::cout << "fibration pullback (m = " << args.m << "): " << to_string(res) << "\n";
            if (auto o = germ.y.order())
                std::cout << "  fiber-coordinate order = " << *o << "\n";
            else
                std::cout << "  fiber-coordinate order >= truncation "
                          << germ.y.truncation() << " (indeterminate)\n";
        }
        return res == Tri::yes ? kExitOk : kExitChecksFailed;
    }

    if (args.divisor.empty())
        throw std::invalid_argument("--divisor is required unless --fibration is given");
    TwoVarPoly f = poly_from_json(cli::read_json_file(args.divisor));
    TangencyMode mode = tangency_mode_from_string(args.mode);
    ContactRecord rec = is_m_tangent(germ, f, args.m);
    Tri requested = mode == TangencyMode::classical ? rec.classical : rec.nonclassical;

    if (args.fmt.pick() == Format::json) {
        Json inputs;
        inputs["germ"] = args.germ;
        inputs["divisor"] = args.divisor;
        inputs["m"] = args.m;
        inputs["tangency_mode"] = args.mode;
        Json result = to_json(rec);
        result["requested"] = args.mode;
        result["verdict"] = to_string(requested);
        emit(envelope("tangency", std::move(inputs), std::move(result)));
    } else {
        if (rec.order)
            std::cout << "contact order = " << *rec.order << "\n";
        else
            std::cout << "contact order >= truncation " << rec.truncation
                      << " (indeterminate)\n";
        std::cout << "classical " << args.m << "-tangency:    " << to_string(rec.classical)
                  << "\n"
                  << "nonclassical " << args.m << "-tangency: " << to_string(rec.nonclassical)
                  << "\n"
                  << "verdict (" << args.mode << "): " << to_string(requested) << "\n";
    }
    return requested == Tri::yes ? kExitOk : kExitChecksFailed;
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::uint64_t seed = 20250819;
    FormatFlags fmt;
};

int run_verify(const VerifyArgs& args) {
    std::vector<cli::GroupReport> reports = cli::run_verify_suite(args.seed);
    long long failures = 0;
    for (const auto& g : reports) failures += g.failures;

    if (args.fmt.pick() == Format::json) {
        Json inputs;
        inputs["seed"] = args.seed;
        emit(envelope("verify", std::move(inputs), cli::to_json(reports)));
    } else {
        for (const auto& g : reports) {
            std::cout << g.name << ": " << g.checks << " checks, " << g.failures
                      << " failures\n";
            for (const auto& note : g.failure_notes) std::cout << "    " << note << "\n";
        }
        std::cout << (failures == 0 ? "all properties hold\n" : "PROPERTY FAILURES PRESENT\n");
    }
    return failures == 0 ? kExitOk : kExitChecksFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory certificates for cyclic covers, blowups, and "
                 "orbifold symmetric differentials"};
    app.set_version_flag("--version", std::string("orbsurf ") + orbsurf::version);
    app.set_config("--config");
    app.require_subcommand(1);

    CoverArgs cover_args;
    auto* cover = app.add_subcommand("cover", "Chern numbers of a cyclic branched cover");
    cover->add_option("--surface", cover_args.surface,
                      "p2 | p1xp1 | b0:k,a,b | surface JSON file")
        ->required();
    cover->add_option("--class", cover_args.cls, "branch pencil class, comma separated");
    cover->add_option("--m", cover_args.m, "cover degree (>= 1)")->required();
    add_format_flags(cover, cover_args.fmt);

    P1P2Args p1p2_args;
    auto* p1p2 = app.add_subcommand("p1p2", "positivity conditions for the cover difference");
    p1p2->add_option("--surface", p1p2_args.surface,
                     "p2 | p1xp1 | b0:k,a,b | surface JSON file")
        ->required();
    p1p2->add_option("--class", p1p2_args.cls, "pencil class, comma separated");
    p1p2->add_option("--m", p1p2_args.m, "cover degree (>= 1)")->required();
    add_format_flags(p1p2, p1p2_args.fmt);

    SearchArgs search_args;
    auto* bts = app.add_subcommand("bt-search", "grid search for certified configurations");
    bts->add_option("--k", search_args.k, "range lo..hi")->required();
    bts->add_option("--a", search_args.a, "range lo..hi")->required();
    bts->add_option("--b", search_args.b, "range lo..hi")->required();
    bts->add_option("--m", search_args.m, "range lo..hi")->required();
    bts->add_option("--mode", search_args.mode, "pencil_class | pencil_class_over_m");
    bts->add_option("--threads", search_args.threads,
                    "worker threads (default: ORBSURF_THREADS or hardware)");
    add_format_flags(bts, search_args.fmt);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "section lower-bound certificate for one config");
    bound->add_option("--k", bound_args.k)->required();
    bound->add_option("--a", bound_args.a)->required();
    bound->add_option("--b", bound_args.b)->required();
    bound->add_option("--m", bound_args.m, "fiber multiplicity (>= 2)")->required();
    bound->add_option("--mode", bound_args.mode, "pencil_class | pencil_class_over_m");
    bound->add_option("--q-max", bound_args.q_max, "threshold scan limit (default 100)");
    bound->add_option("--twist", bound_args.twist,
                      "optional twist class on the blown-up surface, comma separated");
    add_format_flags(bound, bound_args.fmt);

    TangencyArgs tan_args;
    auto* tan = app.add_subcommand("tangency", "contact order and m-tangency of a germ");
    tan->add_option("--germ", tan_args.germ, "germ JSON file {x, y, T}")->required();
    tan->add_option("--divisor", tan_args.divisor,
                    "divisor polynomial JSON file {\"i,j\": coeff}");
    tan->add_option("--m", tan_args.m, "multiplicity (>= 2)")->required();
    tan->add_option("--tangency-mode", tan_args.mode, "classical | nonclassical");
    tan->add_flag("--fibration", tan_args.fibration,
                  "check the multiple-fiber pullback identity instead");
    add_format_flags(tan, tan_args.fmt, /*with_csv=*/false);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the deterministic property suite");
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    add_format_flags(verify, verify_args.fmt, /*with_csv=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cover->parsed()) return run_cover(cover_args);
        if (p1p2->parsed()) return run_p1p2(p1p2_args);
        if (bts->parsed()) return run_search(search_args);
        if (bound->parsed()) return run_bound(bound_args);
        if (tan->parsed()) return run_tangency(tan_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
