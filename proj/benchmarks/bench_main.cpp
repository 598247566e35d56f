#include <benchmark/benchmark.h>

#include <symdiff/symdiff.hpp>

using namespace symdiff;

static void BM_Hsum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t m = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(hsum(n, m));
}
BENCHMARK(BM_Hsum)->Args({2, 60})->Args({4, 120})->Args({8, 240});

static void BM_HsumParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hsum_parallel(4, 240, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HsumParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_Oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t m = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(hsum_oracle(n, m));
}
BENCHMARK(BM_Oracle)->Args({2, 8})->Args({5, 12})->Unit(benchmark::kMillisecond);

static void BM_Mu(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mu(n, 17));
}
BENCHMARK(BM_Mu)->Arg(4)->Arg(12)->Arg(30);

static void BM_H0Omega(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(h0_omega(n));
}
BENCHMARK(BM_H0Omega)->Arg(10)->Arg(1000);

static void BM_UpperIntegral(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(upper_integral(3, Rational(48)));
}
BENCHMARK(BM_UpperIntegral);

static void BM_QuasiFit(benchmark::State& state) {
    std::vector<Sample> samples;
    for (std::int64_t m = 0; m <= 72; ++m) samples.push_back({m, Rational(hsum(2, m))});
    for (auto _ : state) benchmark::DoNotOptimize(fit({samples, 3, 12}));
}
BENCHMARK(BM_QuasiFit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
