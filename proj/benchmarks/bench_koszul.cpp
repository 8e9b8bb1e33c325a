#include <benchmark/benchmark.h>

#include "treeinv/koszul.hpp"
#include "treeinv/registry.hpp"

using namespace treeinv;

static void BM_BuildComplex(benchmark::State& state)
{
    const auto& x = find_example("c").x;
    const auto w = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_complex(x, w));
}
BENCHMARK(BM_BuildComplex)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_HomologyRanks(benchmark::State& state)
{
    const auto c = build_complex(find_example("c").x, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(homology_ranks(c));
}
BENCHMARK(BM_HomologyRanks)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
