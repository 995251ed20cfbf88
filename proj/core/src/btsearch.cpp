#include "orbsurf/btsearch.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace orbsurf {

std::string to_string(BranchClassMode mode) {
    return mode == BranchClassMode::pencil_class ? "pencil_class" : "pencil_class_over_m";
}

BranchClassMode branch_class_mode_from_string(const std::string& s) {
    if (s == "pencil_class") return BranchClassMode::pencil_class;
    if (s == "pencil_class_over_m") return BranchClassMode::pencil_class_over_m;
    throw std::invalid_argument("unknown branch class mode '" + s +
                                "' (expected pencil_class or pencil_class_over_m)");
}

BTConfig build_config(long long k, long long a, long long b, int m, BranchClassMode mode) {
    if (m < 1)
        throw std::invalid_argument("cover degree must be >= 1, got " + std::to_string(m));

    DoubleCover base = double_cover_quadric(k, a, b);
    const SurfaceModel& b0 = base.surface;
    const DivisorClass& l0 = base.pencil;

    const Int n = b0.self_intersection(l0); // 4ab^2 pencil base points
    Blowup blown = blow_up(b0, static_cast<int>(n));
    DivisorClass d = blown.pullback(l0) - blown.exceptional_sum();
    const SurfaceModel& bb = blown.surface();

    BTCertificate cert;
    cert.k = k;
    cert.a = a;
    cert.b = b;
    cert.m = m;
    cert.mode = mode;
    cert.n_points = n;
    cert.d_sq = bb.self_intersection(d);
    cert.k_dot_d = bb.intersect(bb.canonical(), d);
    cert.c1_sq_b = bb.c1_sq();
    cert.c2_b = bb.c2();
    cert.c1sq_minus_c2_b = cert.c1_sq_b - cert.c2_b;
    cert.alpha = Rat(cert.c1sq_minus_c2_b) + (Rat(1) - Rat(1, m)) * Rat(cert.k_dot_d);

    if (cert.d_sq != 0)
        throw std::logic_error("strict transform self-intersection is " + to_string(cert.d_sq) +
                               ", expected 0");
    Rat g_on_b = bb.genus_of(d);
    Rat g_on_b0 = b0.genus_of(l0);
    if (g_on_b != g_on_b0)
        throw std::logic_error("genus mismatch between blowup and base: " + to_string(g_on_b) +
                               " vs " + to_string(g_on_b0));
    const Int ia = a, ib = b, ik = k;
    Int g_formula = 1 + ik * ia * ib + 2 * ia * ib * ib;
    if (g_on_b != Rat(g_formula))
        throw std::logic_error("genus " + to_string(g_on_b) + " disagrees with closed form " +
                               to_string(g_formula));
    cert.g_d = g_formula;

    // Effective branch-defining class for the cover conditions, per mode.
    std::optional<DivisorClass> l_eff;
    bool divisible = true;
    if (mode == BranchClassMode::pencil_class) {
        l_eff = l0;
        cert.checks.bt5_divisibility = true;
        cert.assumptions.push_back("branch divisor taken in |" + std::to_string(m) +
                                   " L0| with L = L0");
    } else {
        for (const auto& c : l0.coeffs)
            if (c % m != 0) divisible = false;
        cert.checks.bt5_divisibility = divisible;
        if (divisible) {
            DivisorClass scaled = l0;
            for (auto& c : scaled.coeffs) c /= m;
            l_eff = std::move(scaled);
            cert.assumptions.push_back("branch divisor taken in |L0| with L = L0/" +
                                       std::to_string(m));
        } else {
            cert.assumptions.push_back("L0 is not divisible by " + std::to_string(m) +
                                       " in the lattice; cover checks skipped");
        }
    }

    if (l_eff) {
        cert.p1p2 = p1p2_check(b0, *l_eff, m);
        cert.cover = cyclic_cover_invariants(b0, *l_eff, m);
        cert.checks.p1 = cert.p1p2.p1;
        cert.checks.p2_exact = cert.p1p2.p2;
        cert.checks.bt6_cover_positive = cert.cover->difference > 0;
        for (const auto& s : cert.cover->assumptions) cert.assumptions.push_back(s);
    } else {
        cert.p1p2.note = "branch class undefined in this mode";
    }

    // Display form of P2: (m-1) a (k-2b) > 12(k+2), only stated for k > 2b.
    const Int lhs = Int(m - 1) * ia * (ik - 2 * ib);
    cert.checks.p2_paper_display = (ik > 2 * ib) && (lhs > 12 * (ik + 2));

    cert.checks.alpha_positive = cert.alpha > 0;
    cert.assumptions.push_back("pencil members assumed smooth and irreducible");

    return BTConfig{std::move(cert), std::move(base), std::move(blown), std::move(d)};
}

OrbifoldPair to_orbifold_pair(const BTConfig& config) {
    OrbifoldAssumptions assume;
    assume.d_smooth_irreducible = true;
    assume.o_d_of_d_trivial = true;
    assume.kappa_b_is_one = true;
    return make_orbifold_pair(config.blowup.surface(), config.d,
                              Multiplicity::finite(config.cert.m), assume);
}

int default_thread_count() {
    if (const char* env = std::getenv("ORBSURF_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void check_range(const SearchRange& r, const char* name, long long min_lo) {
    if (r.lo < min_lo)
        throw std::invalid_argument(std::string("range ") + name + " must start at " +
                                    std::to_string(min_lo) + " or above, got " +
                                    std::to_string(r.lo));
    if (r.hi < r.lo)
        throw std::invalid_argument(std::string("empty range for ") + name + ": " +
                                    std::to_string(r.lo) + ".." + std::to_string(r.hi));
}

} // namespace

SearchOutcome search(SearchRange kr, SearchRange ar, SearchRange br, SearchRange mr,
                     BranchClassMode mode, int max_threads) {
    check_range(kr, "k", 1);
    check_range(ar, "a", 1);
    check_range(br, "b", 1);
    check_range(mr, "m", 1);

    const long long nk = kr.hi - kr.lo + 1;
    const long long na = ar.hi - ar.lo + 1;
    const long long nb = br.hi - br.lo + 1;
    const long long nm = mr.hi - mr.lo + 1;
    const long long cells = nk * na * nb * nm;
    if (cells > 100'000'000)
        throw std::invalid_argument("grid has " + std::to_string(cells) + " cells; refusing");

    struct Cell {
        std::optional<BTCertificate> certified;
        std::optional<P2Disagreement> disagreement;
    };
    std::vector<Cell> slots(static_cast<std::size_t>(cells));

    auto run_cell = [&](long long idx) {
        long long rest = idx;
        const int m = static_cast<int>(mr.lo + rest % nm);
        rest /= nm;
        const long long b = br.lo + rest % nb;
        rest /= nb;
        const long long a = ar.lo + rest % na;
        rest /= na;
        const long long k = kr.lo + rest;

        BTConfig cfg = build_config(k, a, b, m, mode);
        Cell& slot = slots[static_cast<std::size_t>(idx)];
        if (cfg.cert.checks.p2_exact != cfg.cert.checks.p2_paper_display)
            slot.disagreement = P2Disagreement{k, a, b, m, cfg.cert.checks.p2_exact,
                                               cfg.cert.checks.p2_paper_display};
        if (cfg.cert.checks.all()) {
            // Independent re-derivation through the cover formulas before a
            // cell is allowed into the certified list.
            CoverResult again = cyclic_cover_invariants(
                cfg.base.surface,
                mode == BranchClassMode::pencil_class ? cfg.base.pencil : [&] {
                    DivisorClass scaled = cfg.base.pencil;
                    for (auto& c : scaled.coeffs) c /= m;
                    return scaled;
                }(),
                m);
            if (again.difference != cfg.cert.cover->difference)
                throw std::logic_error("cover re-verification mismatch");
            if (again.difference <= 0)
                throw std::logic_error("certified cell lost cover positivity on re-check");
            slot.certified = std::move(cfg.cert);
        }
    };

    int threads = max_threads > 0 ? max_threads : default_thread_count();
    if (static_cast<long long>(threads) > cells) threads = static_cast<int>(cells);

    if (threads <= 1) {
        for (long long i = 0; i < cells; ++i) run_cell(i);
    } else {
        std::atomic<long long> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    long long i = next.fetch_add(1);
                    if (i >= cells) return;
                    try {
                        run_cell(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    SearchOutcome out;
    out.cells = cells;
    for (auto& slot : slots) {
        if (slot.certified) out.certified.push_back(std::move(*slot.certified));
        if (slot.disagreement) out.p2_disagreements.push_back(*slot.disagreement);
    }
    return out;
}

} // namespace orbsurf
