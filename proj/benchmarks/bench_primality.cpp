#include <benchmark/benchmark.h>

#include "wilsonq/exact.hpp"
#include "wilsonq/quotients.hpp"

using namespace wilsonq;

// The balanced k = floor((n-1)/2) splits the (n-1)!-sized product into two
// products of at most ceil(n/2)+1 modular multiplications each; total work
// stays Theta(n) for every k choice.

static void BM_NoncompositeZeroK(benchmark::State& state) {
    auto n = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(noncomposite_test(n, KChoice::zero()));
    }
}
BENCHMARK(BM_NoncompositeZeroK)->Arg(10007)->Arg(100003)->Arg(1000003);

static void BM_NoncompositeBalancedK(benchmark::State& state) {
    auto n = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(noncomposite_test(n, KChoice::balanced()));
    }
}
BENCHMARK(BM_NoncompositeBalancedK)->Arg(10007)->Arg(100003)->Arg(1000003);

static void BM_ZClosed(benchmark::State& state) {
    auto n = static_cast<std::int64_t>(state.range(0));
    z_closed(n);  // warm the factorial memo once
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_closed(n));
    }
}
BENCHMARK(BM_ZClosed)->Arg(301)->Arg(1001)->Arg(2001);

static void BM_ZSum(benchmark::State& state) {
    auto n = static_cast<std::int64_t>(state.range(0));
    z_sum(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_sum(n));
    }
}
BENCHMARK(BM_ZSum)->Arg(101)->Arg(301);

static void BM_HarmonicSumCheck(benchmark::State& state) {
    auto p = static_cast<std::int64_t>(state.range(0));
    harmonic(static_cast<std::uint64_t>(p));  // warm the H_k memo once
    Rational sum(0);
    for (auto _ : state) {
        sum = 0;
        for (std::int64_t k = 1; k < p; ++k) sum += harmonic(static_cast<std::uint64_t>(k));
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_HarmonicSumCheck)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
