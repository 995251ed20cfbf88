#include "verify_suite.hpp"

#include "orbsurf/btsearch.hpp"
#include "orbsurf/contact.hpp"

#include <random>

namespace orbsurf::cli {

namespace {

using Rng = std::mt19937_64;

long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

struct Checker {
    GroupReport report;

    explicit Checker(std::string name) { report.name = std::move(name); }

    void expect(bool ok, const std::string& note) {
        ++report.checks;
        if (!ok) {
            ++report.failures;
            if (report.failure_notes.size() < 5) report.failure_notes.push_back(note);
        }
    }
};

// Dense reference pairing, written without the library's sparse walk.
Int pair_reference(const std::vector<std::vector<Int>>& gram, const DivisorClass& x,
                   const DivisorClass& y) {
    Int acc = 0;
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j)
            acc += x.coeffs[i] * gram[i][j] * y.coeffs[j];
    return acc;
}

SurfaceModel random_surface(Rng& rng, int max_rank) {
    int r = static_cast<int>(pick(rng, 1, max_rank));
    std::vector<std::vector<Int>> gram(static_cast<std::size_t>(r),
                                       std::vector<Int>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Int v = pick(rng, -6, 6);
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    DivisorClass k = DivisorClass::zero(r);
    for (auto& c : k.coeffs) c = pick(rng, -5, 5);
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i) labels.push_back("v" + std::to_string(i));
    return SurfaceModel("random", std::move(labels), std::move(gram), std::move(k),
                        Int(pick(rng, -30, 90)));
}

DivisorClass random_class(Rng& rng, int rank) {
    DivisorClass d = DivisorClass::zero(rank);
    for (auto& c : d.coeffs) c = pick(rng, -9, 9);
    return d;
}

GroupReport group_lattice_pairing(Rng& rng) {
    Checker c("lattice_pairing");
    for (int it = 0; it < 500; ++it) {
        SurfaceModel s = random_surface(rng, 5);
        DivisorClass x = random_class(rng, s.rank());
        DivisorClass y = random_class(rng, s.rank());
        DivisorClass z = random_class(rng, s.rank());
        c.expect(s.intersect(x, y) == pair_reference(s.gram(), x, y), "pairing vs reference");
        c.expect(s.intersect(x, y) == s.intersect(y, x), "symmetry");
        c.expect(s.intersect(x + y, z) == s.intersect(x, z) + s.intersect(y, z), "bilinearity");
    }
    return c.report;
}

GroupReport group_blowup(Rng& rng) {
    Checker c("blowup_bookkeeping");
    for (int it = 0; it < 150; ++it) {
        SurfaceModel s = random_surface(rng, 4);
        int n = static_cast<int>(pick(rng, 0, 6));
        Blowup bl = blow_up(s, n);
        const SurfaceModel& t = bl.surface();
        c.expect(t.rank() == s.rank() + n, "rank");
        c.expect(t.c1_sq() == s.c1_sq() - n, "c1_sq drop");
        c.expect(t.c2() == s.c2() + n, "c2 gain");
        c.expect(t.chi_O() == s.chi_O(), "chi invariance");
        DivisorClass x = random_class(rng, s.rank());
        DivisorClass y = random_class(rng, s.rank());
        c.expect(t.intersect(bl.pullback(x), bl.pullback(y)) == s.intersect(x, y),
                 "pullback isometry");
        c.expect(t.genus_of(bl.pullback(x)) == s.genus_of(x), "pullback genus");
        for (int i = 0; i < n; ++i) {
            c.expect(t.self_intersection(bl.exceptional(i)) == -1, "E self-intersection");
            c.expect(t.intersect(bl.exceptional(i), bl.pullback(x)) == 0, "E orthogonality");
            c.expect(t.intersect(t.canonical(), bl.exceptional(i)) == -1, "K.E");
        }
    }
    return c.report;
}

GroupReport group_cover_identity(Rng& rng) {
    Checker c("cover_difference_identity");
    for (int it = 0; it < 800; ++it) {
        SurfaceModel s = random_surface(rng, 4);
        DivisorClass l = random_class(rng, s.rank());
        int m = static_cast<int>(pick(rng, 1, 25));
        CoverResult r = cyclic_cover_invariants(s, l, m);
        c.expect(r.difference == r.c1_sq - r.c2, "difference equals c1_sq - c2");
        if (m == 1)
            c.expect(r.c1_sq == s.c1_sq() && r.c2 == s.c2(), "degree 1 is the identity");
    }
    CoverResult id = cyclic_cover_invariants(projective_plane(), DivisorClass{Int(1)}, 1);
    c.expect(id.c1_sq == 9 && id.c2 == 3, "P2 degree 1");
    return c.report;
}

GroupReport group_double_cover(Rng& rng) {
    Checker c("double_cover_pairing");
    SurfaceModel q = quadric_surface();
    for (int it = 0; it < 200; ++it) {
        DoubleCover dc = double_cover_quadric(pick(rng, 1, 20), pick(rng, 1, 20),
                                              pick(rng, 1, 20));
        DivisorClass x = random_class(rng, 2);
        DivisorClass y = random_class(rng, 2);
        c.expect(dc.surface.intersect(x, y) == 2 * q.intersect(x, y), "pairing doubles");
        const Int ik = dc.k, ia = dc.a, ib = dc.b;
        c.expect(dc.surface.intersect(dc.surface.canonical(), dc.pencil) == 2 * ik * ia * ib,
                 "K.L0");
        c.expect(dc.surface.self_intersection(dc.pencil) == 4 * ia * ib * ib, "L0.L0");
        c.expect(dc.surface.c2() == 12 * (ik + 2), "c2");
        c.expect(dc.surface.c1_sq() == 0, "c1_sq");
    }
    return c.report;
}

GroupReport group_p1p2(Rng&) {
    Checker c("p1p2_vs_cover_difference");
    for (long long k = 1; k <= 6; ++k)
        for (long long a = 1; a <= 6; ++a)
            for (long long b = 1; b <= 2; ++b) {
                DoubleCover dc = double_cover_quadric(k, a, b);
                for (int m = 1; m <= 16; ++m) {
                    P1P2Record p = p1p2_check(dc.surface, dc.pencil, m);
                    CoverResult r = cyclic_cover_invariants(dc.surface, dc.pencil, m);
                    if (p.p1)
                        c.expect(p.p2 == (r.difference > 0),
                                 "under P1, P2 iff positive difference");
                    const Int ik = k, ia = a, ib = b;
                    bool display = (ik > 2 * ib) && (Int(m - 1) * ia * (ik - 2 * ib) > 12 * (ik + 2));
                    if (display)
                        c.expect(p.p1 && p.p2, "display form implies exact form");
                }
            }
    return c.report;
}

GroupReport group_exponent(Rng& rng) {
    Checker c("exponent_and_defect");
    for (int m = 2; m <= 40; ++m) {
        Multiplicity mm = Multiplicity::finite(m);
        for (long long j = 0; j <= 200; ++j) {
            Int e = exponent(Int(j), mm);
            Int ceil = (Int(j) + m - 1) / m;
            c.expect(e == ceil, "exponent is ceil(j/m)");
            c.expect((j % m == 0) == (e == Int(j) / m), "epsilon vanishes iff m | j");
        }
    }
    Multiplicity inf = Multiplicity::infinity();
    for (long long j = 0; j <= 50; ++j)
        c.expect(exponent(Int(j), inf) == j, "infinite multiplicity returns j");
    for (int it = 0; it < 500; ++it) {
        Multiplicity mm = Multiplicity::finite(static_cast<int>(pick(rng, 2, 25)));
        Int j = pick(rng, 0, 300), k = pick(rng, 0, 300);
        c.expect(mult_defect(j, k, mm) >= 0, "defect nonnegative");
    }
    return c.report;
}

GroupReport group_quotient(Rng&) {
    Checker c("quotient_bound_closed_forms");
    for (int m = 2; m <= 8; ++m)
        for (Int g = 2; g <= 6; ++g) {
            BoundPolynomial pe = quotient_bound_exact_poly(m, g);
            BoundPolynomial pp = quotient_bound_paper_poly(m, g);
            c.expect(pp.coeff(3) == Rat(Int((g - 1) * m * m), Int(3)), "paper cubic coefficient");
            for (long long q = 1; q <= 20; ++q) {
                Int de = quotient_bound_exact(q, m, g);
                Int dp = quotient_bound_paper(q, m, g);
                c.expect(pe.eval_integer(Int(q)) == de, "exact closed form");
                c.expect(pp.eval_integer(Int(q)) == dp, "paper closed form");
                c.expect(de <= dp + small_exponent_correction(q, g),
                         "exact within correction of paper");
            }
        }
    return c.report;
}

GroupReport group_chi(Rng& rng) {
    Checker c("chi_sym_rank2_split_oracle");
    for (int it = 0; it < 150; ++it) {
        SurfaceModel s = random_surface(rng, 4);
        DivisorClass x = random_class(rng, s.rank());
        DivisorClass y = random_class(rng, s.rank());
        DivisorClass e1 = x + y;
        Int e1_sq = s.self_intersection(e1);
        Int e2 = s.intersect(x, y);
        Int ke1 = s.intersect(s.canonical(), e1);
        BoundPolynomial chi = chi_sym_rank2(s.chi_O(), e1_sq, e2, ke1);
        c.expect(chi.coeff(3) == Rat(Int(e1_sq - e2), Int(6)), "leading coefficient");
        c.expect(chi.eval(Rat(0)) == s.chi_O(), "value at 0 is chi(O)");
        for (int n = 0; n <= 5; ++n) {
            // Split-bundle reference: sum chi of the line bundles j*x + (n-j)*y.
            Rat ref = 0;
            for (int j = 0; j <= n; ++j) {
                DivisorClass lj = Int(j) * x + Int(n - j) * y;
                Rat line = s.chi_O() +
                           Rat(Int(s.self_intersection(lj) -
                                   s.intersect(s.canonical(), lj)),
                               Int(2));
                ref += line;
            }
            c.expect(chi.eval(Rat(n)) == ref, "split bundle value");
        }
    }
    return c.report;
}

GroupReport group_alpha(Rng&) {
    Checker c("alpha_and_lb_identity");
    for (long long k = 1; k <= 3; ++k)
        for (long long a = 1; a <= 4; ++a)
            for (int m : {2, 3, 32}) {
                BTConfig cfg = build_config(k, a, 1, m, BranchClassMode::pencil_class);
                OrbifoldPair pair = to_orbifold_pair(cfg);
                c.expect(alpha(pair) == cfg.cert.alpha, "alpha agrees across modules");
                LogChernNumbers lc = log_chern(pair);
                Int m3 = Int(m) * m * m;
                c.expect(cfg.cert.alpha * Rat(m3) ==
                             Rat(Int(lc.difference * m3 - cfg.cert.k_dot_d * Int(m) * m)),
                         "alpha m^3 identity");
                if (pair.g >= 2) {
                    SectionBound sb = section_bound(pair);
                    c.expect(sb.cubic_coeff == cfg.cert.alpha * Rat(m3, Int(6)),
                             "lb cubic coefficient");
                }
            }
    return c.report;
}

GroupReport group_germs(Rng& rng) {
    Checker c("germ_pullback_and_reparametrization");
    const int t = 48;
    for (int it = 0; it < 800; ++it) {
        int m = static_cast<int>(pick(rng, 2, 7));
        std::vector<Rat> wc(static_cast<std::size_t>(t));
        int lead = static_cast<int>(pick(rng, 0, 30));
        bool zero_series = pick(rng, 0, 9) == 0;
        if (!zero_series) {
            wc[static_cast<std::size_t>(lead)] = Rat(pick(rng, 1, 5));
            for (int extra = 0; extra < 4; ++extra) {
                int at = static_cast<int>(pick(rng, lead, t - 1));
                wc[static_cast<std::size_t>(at)] = Rat(pick(rng, -5, 5));
            }
            wc[static_cast<std::size_t>(lead)] = Rat(pick(rng, 1, 5));
        }
        PowerSeries u({Rat(0), Rat(1)}, t);
        PowerSeries w(wc, t);
        CurveGerm h = make_germ(u, w);
        Tri res = fibration_pullback_check(h, m);
        std::optional<int> ow = h.y.order();
        c.expect(res != Tri::no, "identity never refuted over exact arithmetic");
        if (ow && static_cast<long long>(m) * *ow < t)
            c.expect(res == Tri::yes, "visible orders certify");
        else
            c.expect(res == Tri::indeterminate, "invisible orders stay indeterminate");
    }
    // Reparametrization invariance of contact orders.
    TwoVarPoly f;
    f.set(0, 1, Rat(1));
    f.set(2, 0, Rat(-1));
    for (int it = 0; it < 200; ++it) {
        int spike = static_cast<int>(pick(rng, 3, 12));
        std::vector<Rat> yc(static_cast<std::size_t>(t));
        yc[2] = Rat(1);
        yc[static_cast<std::size_t>(spike)] = Rat(pick(rng, 1, 7));
        CurveGerm h = make_germ(PowerSeries({Rat(0), Rat(1)}, t), PowerSeries(yc, t));
        std::vector<Rat> rc(static_cast<std::size_t>(t));
        rc[1] = Rat(pick(rng, 1, 4));
        rc[2] = Rat(pick(rng, -3, 3));
        PowerSeries r(rc, t);
        CurveGerm hr = make_germ(h.x.compose(r), h.y.compose(r));
        c.expect(contact_order(h, f) == contact_order(hr, f),
                 "contact order is reparametrization invariant");
    }
    return c.report;
}

} // namespace

std::vector<GroupReport> run_verify_suite(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<GroupReport> out;
    out.push_back(group_lattice_pairing(rng));
    out.push_back(group_blowup(rng));
    out.push_back(group_cover_identity(rng));
    out.push_back(group_double_cover(rng));
    out.push_back(group_p1p2(rng));
    out.push_back(group_exponent(rng));
    out.push_back(group_quotient(rng));
    out.push_back(group_chi(rng));
    out.push_back(group_alpha(rng));
    out.push_back(group_germs(rng));
    return out;
}

Json to_json(const std::vector<GroupReport>& reports) {
    Json groups = Json::array();
    long long checks = 0, failures = 0;
    for (const auto& g : reports) {
        Json jg;
        jg["name"] = g.name;
        jg["checks"] = g.checks;
        jg["failures"] = g.failures;
        if (!g.failure_notes.empty()) jg["notes"] = g.failure_notes;
        groups.push_back(std::move(jg));
        checks += g.checks;
        failures += g.failures;
    }
    Json out;
    out["groups"] = std::move(groups);
    out["total_checks"] = checks;
    out["total_failures"] = failures;
    return out;
}

} // namespace orbsurf::cli
