#include <benchmark/benchmark.h>

#include "quadtwist/localdata.hpp"
#include "quadtwist/mkt.hpp"
#include "quadtwist/tunnell.hpp"

using namespace quadtwist;

static void BM_CountRepresentations(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(count_representations(2, 1, 32, n));
}
BENCHMARK(BM_CountRepresentations)->Arg(1001)->Arg(10001)->Arg(100001);

static void BM_ThetaCoefficient(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(coeff_a(n));
}
BENCHMARK(BM_ThetaCoefficient)->Arg(1009)->Arg(10007)->Arg(100003);

static void BM_TateReductionBase2(benchmark::State& state) {
    CurveQ E = CurveQ::short_form(-1, 0).twist(state.range(0));
    auto F = LocalFieldDesc::base(2);
    for (auto _ : state) benchmark::DoNotOptimize(tate_reduction(E, F));
}
BENCHMARK(BM_TateReductionBase2)->Arg(17)->Arg(6)->Arg(-105);

static void BM_TateReductionCompletion(benchmark::State& state) {
    CurveQ E = CurveQ::short_form(-1, 0);
    auto F = LocalFieldDesc::completion(2, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tate_reduction(E, F));
}
BENCHMARK(BM_TateReductionCompletion)->Arg(3)->Arg(2)->Arg(-6);

static void BM_HilbertSymbol(benchmark::State& state) {
    Place v = Place::finite(2);
    for (auto _ : state) {
        for (long a = 2; a < 40; ++a)
            benchmark::DoNotOptimize(hilbert_symbol(Rat(a), Rat(-a + 1), v));
    }
}
BENCHMARK(BM_HilbertSymbol);

static void BM_MktIndex(benchmark::State& state) {
    CurveQ E = CurveQ::short_form(-1, 0);
    Int n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(mkt_index(E, n).delta);
}
BENCHMARK(BM_MktIndex)->Arg(17)->Arg(-105)->Arg(499);

BENCHMARK_MAIN();
