#include <benchmark/benchmark.h>

#include "gwpt/degeneration.hpp"
#include "gwpt/fixtures.hpp"
#include "gwpt/ktilde.hpp"
#include "gwpt/local_models.hpp"
#include "gwpt/transition.hpp"

using namespace gwpt;

static void BM_SeriesMul(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto a = pt_local_curve(2, n);
    const auto b = pt_local_curve(3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64);

static void BM_LocalCorrespondence(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_local_correspondence(d, 12));
    }
}
BENCHMARK(BM_LocalCorrespondence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_AssemblePt(benchmark::State& state)
{
    const auto s = make_synthetic_degeneration({8, 8, 3}, 1);
    const EffectiveClass c({1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_absolute_pt(s, c));
    }
}
BENCHMARK(BM_AssemblePt)->Unit(benchmark::kMicrosecond);

static void BM_BarTransform(benchmark::State& state)
{
    const auto k = make_synthetic_ktilde(5, 1);
    BarInput in;
    in.alpha = {3, 2};
    in.gammas = {{"H", 2}, {"pt", 6}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bar_transform(in, k, {false}));
    }
}
BENCHMARK(BM_BarTransform)->Unit(benchmark::kMicrosecond);

static void BM_MainTheorem(benchmark::State& state)
{
    const auto toy = make_conifold_toy({64, 10, 4});
    const EffectiveClass b({static_cast<long>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_main_theorem(toy, b, {}));
    }
}
BENCHMARK(BM_MainTheorem)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
