#include "exdiv/sweeps.hpp"

#include <benchmark/benchmark.h>

using namespace exdiv::sweeps;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_RingSweep(benchmark::State& state) {
    RingSweepParams p;
    p.samples = 100;
    for (auto _ : state) benchmark::DoNotOptimize(ring_sweep(p, mode(state)));
}

void BM_SympowSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sympow_sweep(SympowSweepParams{}, mode(state)));
}

void BM_ConeSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cone_sweep(ConeSweepParams{}, mode(state)));
}

void BM_InvarianceSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(invariance_sweep(InvarianceSweepParams{}, mode(state)));
}

void BM_CertificateSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(certificate_sweep(CertificateSweepParams{}, mode(state)));
}

}  // namespace

BENCHMARK(BM_RingSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SympowSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvarianceSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
