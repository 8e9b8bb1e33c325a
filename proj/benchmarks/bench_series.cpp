#include <benchmark/benchmark.h>

#include "treeinv/series.hpp"

using namespace treeinv;

namespace {

IntSeries geometric(std::size_t order)
{
    return expand(RationalForm{{0, -1}, {1, 1}}, order);
}

} // namespace

static void BM_Compose(benchmark::State& state)
{
    const IntSeries f = geometric(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(f, f));
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(64)->Arg(128);

static void BM_Invert(benchmark::State& state)
{
    const IntSeries f = expand(RationalForm{{0, -1, 1}, {1, 2, 1}}, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_Invert)->Arg(16)->Arg(32)->Arg(64);
