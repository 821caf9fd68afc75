#include <benchmark/benchmark.h>

#include "qcd/laplace.hpp"
#include "qcd/verify.hpp"

namespace {

void BM_laplace_slit_disc(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qcd::laplace_ring_module(qcd::SlitDiscDomain{0.5}, n));
    }
}
BENCHMARK(BM_laplace_slit_disc)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_discrete_min_dilatation(benchmark::State& state) {
    const int rings = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::discrete_min_dilatation(0.25, rings));
    }
}
BENCHMARK(BM_discrete_min_dilatation)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace
