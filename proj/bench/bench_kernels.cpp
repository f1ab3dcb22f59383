// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include "gapcert/cycles.hpp"
#include "gapcert/distances.hpp"
#include "gapcert/generators.hpp"
#include "gapcert/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gapcert;

namespace {

std::vector<double> random_symmetric(int n)
{
    std::mt19937 rng(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            a[i * n + j] = a[j * n + i] = dist(rng);
    return a;
}

void BM_jacobi_parallel(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    auto a = random_symmetric(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigen_symmetric(a, n));
}

void BM_jacobi_serial(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    auto a = random_symmetric(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::eigen_symmetric(a, n));
}

void BM_cycles_parallel(benchmark::State &state)
{
    auto g = gen::blow_up_odd_cycle(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_cycles(g, 5));
}

void BM_cycles_serial(benchmark::State &state)
{
    auto g = gen::blow_up_odd_cycle(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::enumerate_cycles(g, 5));
}

void BM_distances_parallel(benchmark::State &state)
{
    auto g = gen::hypercube(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_distances_serial(benchmark::State &state)
{
    auto g = gen::hypercube(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::all_pairs_distances(g));
}

void BM_odd_girth_parallel(benchmark::State &state)
{
    auto g = gen::blow_up_odd_cycle(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(odd_girth(g));
}

void BM_odd_girth_serial(benchmark::State &state)
{
    auto g = gen::blow_up_odd_cycle(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::odd_girth(g));
}

} // namespace

BENCHMARK(BM_jacobi_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jacobi_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cycles_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cycles_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distances_parallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distances_serial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_odd_girth_parallel)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_odd_girth_serial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
