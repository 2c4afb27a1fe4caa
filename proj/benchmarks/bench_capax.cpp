#include <benchmark/benchmark.h>

#include "capax/optimize.hpp"

using namespace capax;

static void SpectrumMerge(benchmark::State& state) {
    Ellipsoid e = Ellipsoid::finite({Rational(5, 7), Rational(3, 4)});
    for (auto _ : state) {
        auto cs = capacities(e, state.range(0));
        benchmark::DoNotOptimize(cs);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SpectrumMerge)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void ConvexCapacityBatch(benchmark::State& state) {
    ToricProfile p = ellipsoid_profile(Rational(5, 7), Rational(3, 4), ProfileKind::Convex);
    for (auto _ : state) {
        auto cs = capacities_convex(p, state.range(0));
        benchmark::DoNotOptimize(cs);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ConvexCapacityBatch)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void ConcaveCapacitySingle(benchmark::State& state) {
    ToricProfile p(ProfileKind::Concave,
                   {Point{0, 4}, Point{1, 2}, Point{2, 1}, Point{4, 0}});
    for (auto _ : state) {
        Rational c = capacity_concave(p, state.range(0));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(ConcaveCapacitySingle)->Arg(5)->Arg(20)->Arg(40);

static void EllipsoidGridSearch(benchmark::State& state) {
    for (auto _ : state) {
        auto result = global_ellipsoid_search(8, state.range(0));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(EllipsoidGridSearch)->Arg(10)->Arg(30);

static void TwoCornerSweep(benchmark::State& state) {
    GridSpec grid;
    grid.r_denom_bound = 6;
    grid.s_steps = 16;
    for (auto _ : state) {
        auto report = verify_convex_toric_max(state.range(0), grid);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(TwoCornerSweep)->Arg(2)->Arg(5);

BENCHMARK_MAIN();
