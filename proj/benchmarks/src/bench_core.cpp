// Microbenchmarks for the hot paths: continuant products, the triple
// recursion, certified logarithms, and the enumeration oracle.

#include <dio/certlog.hpp>
#include <dio/constructions.hpp>
#include <dio/oracle.hpp>
#include <dio/words.hpp>

#include <benchmark/benchmark.h>

#include <map>

namespace {

using namespace dio;

void BM_WordMatrix(benchmark::State& state) {
    const Word word = fibonacci_word_prefix(static_cast<std::size_t>(state.range(0)));
    const std::map<char, Int> assign{{'a', Int(1)}, {'b', Int(2)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(word_matrix(word, assign));
    }
}
BENCHMARK(BM_WordMatrix)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TripleSequence(benchmark::State& state) {
    const ExtremalSpec spec{Int(1), Int(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(triple_sequence(spec, state.range(0)));
    }
}
BENCHMARK(BM_TripleSequence)->Arg(15)->Arg(20)->Arg(25);

void BM_LnInterval(benchmark::State& state) {
    const RatInterval five{Rational(5)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln_interval(five, state.range(0)));
    }
}
BENCHMARK(BM_LnInterval)->Arg(96)->Arg(256)->Arg(1024);

void BM_MinimalPoints1x1(benchmark::State& state) {
    const TargetSystem target = TargetSystem::general({{RealEntry::sqrt_of(Int(2))}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_points(target, Int(state.range(0))));
    }
}
BENCHMARK(BM_MinimalPoints1x1)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MinimalPointsRow2(benchmark::State& state) {
    const RealEntry xi = RealEntry::cf_backed(xi_ab_cf(ExtremalSpec{Int(1), Int(2)}));
    const TargetSystem target = TargetSystem::power_row(xi, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_points(target, Int(state.range(0))));
    }
}
BENCHMARK(BM_MinimalPointsRow2)->Arg(50)->Arg(150);

void BM_SigmaOf(benchmark::State& state) {
    const SigmaSpec spec{{}, {Int(1), Int(2)}};
    const Rational tol = make_rational(Int(1), pow2(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_of(spec, tol));
    }
}
BENCHMARK(BM_SigmaOf)->Arg(32)->Arg(96)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
