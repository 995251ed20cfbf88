#pragma once

#include "orbsurf/covers.hpp"
#include "orbsurf/orbdiff.hpp"

namespace orbsurf {

// Two readings of which class the degree-m branched cover is taken along.
//   pencil_class:        branch divisor lies in |m L0|, the cover conditions
//                        run with L = L0. This is the reading used by the
//                        worked numbers in this library's tests.
//   pencil_class_over_m: L = L0 / m inside the lattice; only meaningful when
//                        m divides every coefficient of L0.
enum class BranchClassMode { pencil_class, pencil_class_over_m };

std::string to_string(BranchClassMode mode);
BranchClassMode branch_class_mode_from_string(const std::string& s);

struct BTChecks {
    bool p1 = false;
    bool p2_exact = false;
    bool p2_paper_display = false;
    bool bt5_divisibility = false;
    bool bt6_cover_positive = false;
    bool alpha_positive = false;

    bool all() const {
        return p1 && p2_exact && p2_paper_display && bt5_divisibility && bt6_cover_positive &&
               alpha_positive;
    }
};

// Everything a certified grid point needs to be reported and re-verified,
// without the (potentially large) lattice models.
struct BTCertificate {
    long long k = 0, a = 0, b = 0;
    int m = 1;
    BranchClassMode mode = BranchClassMode::pencil_class;

    Int n_points;   // 4ab^2, the blown-up pencil base points
    Int d_sq;       // always 0
    Int k_dot_d;    // K_B . D = 2kab + 4ab^2
    Int g_d;        // 1 + kab + 2ab^2
    Int c1_sq_b;
    Int c2_b;
    Int c1sq_minus_c2_b;
    Rat alpha;      // c1sq_minus_c2_b + (1 - 1/m) K_B.D

    P1P2Record p1p2;
    std::optional<CoverResult> cover; // absent when divisibility fails in over-m mode
    BTChecks checks;
    std::vector<std::string> assumptions;
};

// Certificate plus the assembled models, for feeding into the section
// bound machinery.
struct BTConfig {
    BTCertificate cert;
    DoubleCover base;     // B0 and the pencil class L0
    Blowup blowup;        // B, blown up at the pencil base points
    DivisorClass d;       // strict transform L0 - sum E_i on B
};

// Assembles the full chain for one parameter choice. Throws on k, a, b < 1
// or m < 1; all internal consistency (genus on B vs genus on B0, D.D = 0,
// declared formulas vs lattice arithmetic) is asserted, not assumed.
BTConfig build_config(long long k, long long a, long long b, int m, BranchClassMode mode);

// The three geometric hypotheses (smooth irreducible member, trivial
// normal bundle, Kodaira dimension 1) hold by construction for this family
// and are asserted on the resulting pair. Requires m >= 2.
OrbifoldPair to_orbifold_pair(const BTConfig& config);

struct SearchRange {
    long long lo = 1;
    long long hi = 1;
};

struct P2Disagreement {
    long long k = 0, a = 0, b = 0;
    int m = 1;
    bool p2_exact = false;
    bool p2_paper_display = false;
};

struct SearchOutcome {
    // Grid points where every check passed, in lexicographic (k, a, b, m)
    // order regardless of thread scheduling.
    std::vector<BTCertificate> certified;
    std::vector<P2Disagreement> p2_disagreements;
    long long cells = 0;
};

// max_threads <= 0 picks ORBSURF_THREADS if set, hardware concurrency
// otherwise.
SearchOutcome search(SearchRange k_range, SearchRange a_range, SearchRange b_range,
                     SearchRange m_range, BranchClassMode mode, int max_threads = 0);

int default_thread_count();

} // namespace orbsurf
