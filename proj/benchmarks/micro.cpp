#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "unisplit/hull.hpp"
#include "unisplit/split.hpp"
#include "unisplit/synth.hpp"
#include "unisplit/udmm.hpp"
#include "unisplit/uu_test.hpp"

using namespace unisplit;

namespace {

Dataset bimodal(std::size_t n) {
    const auto s = sample_mixture({{Normal{0, 1}, n / 2}, {Normal{6, 1}, n - n / 2}}, 42);
    return Dataset::from_samples(s.values);
}

Dataset gaussian(std::size_t n) { return Dataset::from_samples(sample_spec(DistSpec{Normal{0, 1}, n}, 42)); }

void BM_Hulls(benchmark::State& state) {
    const Dataset d = gaussian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcm_indices(d.view()));
        benchmark::DoNotOptimize(lcm_indices(d.view()));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hulls)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_UUTest(benchmark::State& state) {
    const Dataset d = gaussian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(uu_test(d, 0.01));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UUTest)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_Split(benchmark::State& state) {
    const Dataset d = bimodal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(split(d, 0.01));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Split)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_Fit(benchmark::State& state) {
    const Dataset d = bimodal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fit_udmm(d, 0.01));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fit)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_Sample(benchmark::State& state) {
    const Udmm m = fit_udmm(bimodal(10000), 0.01);
    for (auto _ : state) benchmark::DoNotOptimize(udmm_sample(m, static_cast<std::size_t>(state.range(0)), 7));
}
BENCHMARK(BM_Sample)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
