#include "orbsurf/btsearch.hpp"
#include "orbsurf/contact.hpp"
#include "orbsurf/covers.hpp"
#include "orbsurf/orbdiff.hpp"

#include <benchmark/benchmark.h>

using namespace orbsurf;

static void BM_BlowupPairing(benchmark::State& state) {
    Blowup blown = blow_up(quadric_surface(), static_cast<int>(state.range(0)));
    DivisorClass d = blown.pullback(DivisorClass{Int(1), Int(36)}) - blown.exceptional_sum();
    const SurfaceModel& s = blown.surface();
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.intersect(s.canonical(), d));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BlowupPairing)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_CoverGridCell(benchmark::State& state) {
    // One cell of the search grid at covers level: the rank-2 model, the
    // positivity conditions, and the cover invariants.
    for (auto _ : state) {
        DoubleCover dc = double_cover_quadric(3, 36, 1);
        benchmark::DoNotOptimize(p1p2_check(dc.surface, dc.pencil, 32));
        benchmark::DoNotOptimize(cyclic_cover_invariants(dc.surface, dc.pencil, 32));
    }
}
BENCHMARK(BM_CoverGridCell);

static void BM_BuildConfig(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_config(3, 36, 1, 32, BranchClassMode::pencil_class));
    }
}
BENCHMARK(BM_BuildConfig);

static void BM_SectionBoundPipeline(benchmark::State& state) {
    BTConfig cfg = build_config(3, 36, 1, 32, BranchClassMode::pencil_class);
    OrbifoldPair pair = to_orbifold_pair(cfg);
    for (auto _ : state) {
        SectionBound sb = section_bound(pair);
        benchmark::DoNotOptimize(sb.threshold(100));
    }
}
BENCHMARK(BM_SectionBoundPipeline);

static void BM_QuotientDirect(benchmark::State& state) {
    const long long q = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_bound_exact(q, 12, Int(10)));
    }
    state.SetComplexityN(q);
}
BENCHMARK(BM_QuotientDirect)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_QuotientClosedForm(benchmark::State& state) {
    const long long q = state.range(0);
    BoundPolynomial p = quotient_bound_exact_poly(12, Int(10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.eval_integer(Int(q)));
    }
    state.SetComplexityN(q);
}
BENCHMARK(BM_QuotientClosedForm)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_GermPullback(benchmark::State& state) {
    const int t = 64;
    std::vector<Rat> w(13);
    for (std::size_t i = 2; i < w.size(); ++i) w[i] = Rat(static_cast<long long>(i % 5) - 2);
    CurveGerm h = make_germ(PowerSeries({Rat(0), Rat(1)}, t), PowerSeries(w, t));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fibration_pullback_check(h, 7));
    }
}
BENCHMARK(BM_GermPullback);

BENCHMARK_MAIN();
