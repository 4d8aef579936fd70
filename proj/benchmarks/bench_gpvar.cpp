#include "gpvar/gpe_radial.hpp"
#include "gpvar/oracle.hpp"
#include "gpvar/solver.hpp"
#include "gpvar/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace gpvar;

static void BM_erfcx(benchmark::State& state) {
    double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(x);
        benchmark::DoNotOptimize(specfun::erfcx(x));
    }
}
BENCHMARK(BM_erfcx)->Arg(5)->Arg(30)->Arg(100)->Arg(1000);

static void BM_local_energy(benchmark::State& state) {
    const Model m = LocalModel(-1.0, 3.0);
    double sigma = 0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma);
        benchmark::DoNotOptimize(energy(m, sigma));
    }
}
BENCHMARK(BM_local_energy);

static void BM_nonlocal_slope(benchmark::State& state) {
    const Model m = NonlocalModel(-0.01, 50.0, 8.0, 1.0);
    double sigma = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma);
        benchmark::DoNotOptimize(denergy_dsigma(m, sigma));
    }
}
BENCHMARK(BM_nonlocal_slope);

static void BM_find_branches_witness(benchmark::State& state) {
    const Model m = NonlocalModel(-0.01, 50.0, 8.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_branches(m, 1.0));
}
BENCHMARK(BM_find_branches_witness)->Unit(benchmark::kMicrosecond);

static void BM_critical_scan(benchmark::State& state) {
    const Model m = LocalModel(-1.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(critical_scan(m));
}
BENCHMARK(BM_critical_scan)->Unit(benchmark::kMicrosecond);

static void BM_quad_energy_contact(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::quad_energy(Contact{1.0}, 1.0, 0.5));
}
BENCHMARK(BM_quad_energy_contact)->Unit(benchmark::kMicrosecond);

static void BM_quad_energy_screened(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::quad_energy(Composite{{-0.5}, {1.0, 2.0}}, 1.0, 0.7));
}
BENCHMARK(BM_quad_energy_screened)->Unit(benchmark::kMillisecond);

static void BM_relax(benchmark::State& state) {
    const RadialGrid grid{12.0, static_cast<int>(state.range(0))};
    RelaxConfig cfg;
    cfg.record_history = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(relax(20.0, grid, cfg));
}
BENCHMARK(BM_relax)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
