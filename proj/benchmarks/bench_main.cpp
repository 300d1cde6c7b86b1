#include <powop/alpha_solver.hpp>
#include <powop/power_operation.hpp>
#include <powop/symmetric_ranks.hpp>

#include <benchmark/benchmark.h>

using namespace powop;

static void BM_RootFixedPoint(benchmark::State& state)
{
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_alpha_fixed_point(p, 64));
    }
}
BENCHMARK(BM_RootFixedPoint)->Arg(2)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_RootNewton(benchmark::State& state)
{
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_alpha_newton(p, 64));
    }
}
BENCHMARK(BM_RootNewton)->Arg(2)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_PsiF(benchmark::State& state)
{
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const auto n = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi_F(p, n));
    }
}
BENCHMARK(BM_PsiF)->Args({3, 16})->Args({3, 64})->Args({11, 32})->Unit(benchmark::kMillisecond);

static void BM_DCoefficientGrid(benchmark::State& state)
{
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const bool dp = state.range(1) != 0;
    for (auto _ : state) {
        for (unsigned i = 0; i <= p; ++i) {
            for (unsigned tau = 1; tau <= p; ++tau) {
                benchmark::DoNotOptimize(dp ? d_coefficient_oracle(p, i, tau) : d_coefficient(p, i, tau));
            }
        }
    }
}
BENCHMARK(BM_DCoefficientGrid)->Args({7, 0})->Args({7, 1})->Args({11, 0})->Args({11, 1});

static void BM_HnfEnumeration(benchmark::State& state)
{
    const auto r = static_cast<unsigned>(state.range(0));
    const auto m = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublattice_count_bruteforce(2, r, m));
    }
}
BENCHMARK(BM_HnfEnumeration)->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
