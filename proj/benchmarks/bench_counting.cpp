#include <benchmark/benchmark.h>

#include "treeinv/avoidance.hpp"
#include "treeinv/registry.hpp"

using namespace treeinv;

static void BM_CountDp(benchmark::State& state)
{
    const auto& x = find_example("i").x;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_dp(x, n));
}
BENCHMARK(BM_CountDp)->Arg(8)->Arg(16)->Arg(32);

static void BM_CountBrute(benchmark::State& state)
{
    const auto& x = find_example("c").x;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_brute(x, n));
}
BENCHMARK(BM_CountBrute)->Arg(4)->Arg(6)->Arg(8);

static void BM_CountDpTernary(benchmark::State& state)
{
    const auto& x = find_example("ka").x;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_dp(x, n));
}
BENCHMARK(BM_CountDpTernary)->Arg(8)->Arg(16);
