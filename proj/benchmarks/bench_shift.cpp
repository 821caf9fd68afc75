#include <benchmark/benchmark.h>

#include <cmath>

#include "qcd/shift.hpp"

namespace {

void BM_build_shift(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::build_shift(0.25));
    }
}
BENCHMARK(BM_build_shift);

void BM_evaluate_shift(benchmark::State& state) {
    const auto f = qcd::build_shift(0.25);
    double th = 0.0;
    for (auto _ : state) {
        const qcd::complex z = std::polar(0.6, th);
        benchmark::DoNotOptimize(qcd::evaluate_shift(f, z));
        th += 1e-3;
    }
}
BENCHMARK(BM_evaluate_shift);

void BM_slit_map_eval(benchmark::State& state) {
    const auto f = qcd::build_shift(0.25);
    const auto& m = f.slit_map();
    double th = 0.2;
    for (auto _ : state) {
        const qcd::complex z = std::polar(0.7, th);
        benchmark::DoNotOptimize(m.map(z));
        th += 1e-3;
    }
}
BENCHMARK(BM_slit_map_eval);

void BM_beltrami_sample(benchmark::State& state) {
    const auto f = qcd::build_shift(0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::beltrami_of_shift(f, {0.3, 0.4}));
    }
}
BENCHMARK(BM_beltrami_sample);

} // namespace
