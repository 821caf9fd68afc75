#include <benchmark/benchmark.h>

#include "qcd/elliptic.hpp"
#include "qcd/modulus.hpp"

namespace {

void BM_agm(benchmark::State& state) {
    double k = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::agm(1.0, k));
        k = k < 0.9 ? k + 1e-6 : 0.1;
    }
}
BENCHMARK(BM_agm);

void BM_complete_elliptic_k(benchmark::State& state) {
    double k = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::complete_elliptic_k(k));
        k = k < 0.99 ? k + 1e-6 : 0.1;
    }
}
BENCHMARK(BM_complete_elliptic_k);

void BM_jacobi_sn_complex(benchmark::State& state) {
    qcd::complex u(0.4, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::jacobi_sn(u, 0.35));
        u += qcd::complex(1e-7, -1e-7);
    }
}
BENCHMARK(BM_jacobi_sn_complex);

void BM_grotzsch_phi(benchmark::State& state) {
    double R = 1.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcd::grotzsch_phi(R));
        R = R < 100.0 ? R + 1e-5 : 1.5;
    }
}
BENCHMARK(BM_grotzsch_phi);

} // namespace
