#include <benchmark/benchmark.h>

#include "pellkit/applications.hpp"
#include "pellkit/pell.hpp"
#include "pellkit/stormer.hpp"

using namespace pellkit;

static void FundamentalSolution(benchmark::State& state) {
    Int d(state.range(0));
    for (auto _ : state) {
        auto f = fundamental_solution(d, 1);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(FundamentalSolution)->Arg(61)->Arg(421)->Arg(9949);

static void FactorGolden(benchmark::State& state) {
    Int n = Int("59425114757512643212875125");  // x_125 of the (5,1,4) chain
    for (auto _ : state) {
        auto f = try_factor(n, 200'000);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(FactorGolden);

static void MixedPow(benchmark::State& state) {
    MixedSolution s(1, 1, 5, 1, 4);
    for (auto _ : state) {
        auto p = mixed_pow(s, static_cast<unsigned long>(state.range(0)));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(MixedPow)->Arg(25)->Arg(125)->Arg(1001);

static void VerifySmall(benchmark::State& state) {
    VerifyBounds b;
    b.d_max = 30;
    b.m_max = 5;
    for (auto _ : state) {
        auto rep = verify_theorem(TheoremId::t3_5, b);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(VerifySmall);

static void GpScan(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = gp_scan(static_cast<unsigned long>(state.range(0)), 3);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(GpScan)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
