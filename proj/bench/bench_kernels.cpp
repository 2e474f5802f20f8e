#include <benchmark/benchmark.h>

#include "cquant/closed_form.hpp"
#include "cquant/oracle.hpp"

namespace {

void BM_BruteForceSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cquant::oracle::brute_force_serial(state.range(0)));
    }
}
BENCHMARK(BM_BruteForceSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BruteForceParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cquant::oracle::brute_force(state.range(0)));
    }
}
BENCHMARK(BM_BruteForceParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RiemannSerial(benchmark::State& state) {
    const auto q = cquant::closed_form::optimal_points(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cquant::oracle::riemann_distortion_serial(q, state.range(0)));
    }
}
BENCHMARK(BM_RiemannSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_RiemannParallel(benchmark::State& state) {
    const auto q = cquant::closed_form::optimal_points(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cquant::oracle::riemann_distortion(q, state.range(0)));
    }
}
BENCHMARK(BM_RiemannParallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
