#include <benchmark/benchmark.h>

#include <random>

#include "floercone/gf2.hpp"
#include "floercone/staircase.hpp"
#include "floercone/surgery.hpp"

using namespace floercone;

static void BM_Gf2Rank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(12345);
    gf2::BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gf2Rank)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_ConeHomology(benchmark::State& state) {
    StaircaseSpec spec;
    for (int j = 1; j <= state.range(0); ++j) spec.steps.push_back(j);
    const KnotComplex b = make_staircase(spec);
    const int n = 2 * b.genus();
    for (auto _ : state)
        benchmark::DoNotOptimize(surgery::build_cone(b, n, 1).homology_rank());
}
BENCHMARK(BM_ConeHomology)->DenseRange(2, 10, 2);

static void BM_HfRanks(benchmark::State& state) {
    StaircaseSpec spec;
    for (int j = 1; j <= state.range(0); ++j) spec.steps.push_back(j);
    const KnotComplex b = make_staircase(spec);
    const int n = 2 * b.genus();
    for (auto _ : state) benchmark::DoNotOptimize(surgery::hf_ranks(b, n));
}
BENCHMARK(BM_HfRanks)->DenseRange(1, 5, 1);

static void BM_Recognize(benchmark::State& state) {
    StaircaseSpec spec;
    for (int j = 1; j <= state.range(0); ++j) spec.steps.push_back(j);
    const KnotComplex b = make_staircase(spec);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_staircase(b).ok());
}
BENCHMARK(BM_Recognize)->DenseRange(2, 10, 4);

BENCHMARK_MAIN();
