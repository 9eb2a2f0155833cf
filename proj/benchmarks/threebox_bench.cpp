#include <benchmark/benchmark.h>

#include "threebox/feasibility.hpp"
#include "threebox/inequality.hpp"
#include "threebox/pps.hpp"
#include "threebox/scm.hpp"

namespace {

using namespace threebox;

void BM_JointBehavior(benchmark::State& state) {
    const auto s = pps::three_box_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(pps::joint_behavior(s));
    }
}
BENCHMARK(BM_JointBehavior);

void BM_InducedBehavior(benchmark::State& state) {
    const auto m = scm::catalog(scm::CatalogCase::d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scm::induced_behavior(m, {1, 2, 3}));
    }
}
BENCHMARK(BM_InducedBehavior);

void BM_PairwiseCheck(benchmark::State& state) {
    const auto b = three_box_behavior();
    for (auto _ : state) {
        benchmark::DoNotOptimize(inequality::pairwise_check(b));
    }
}
BENCHMARK(BM_PairwiseCheck);

void BM_EnumerateStrategies(benchmark::State& state) {
    const auto v = dag::all_variants()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility::enumerate_strategies(v, {1, 2, 3}));
    }
    state.SetLabel(v.shorthand());
}
BENCHMARK(BM_EnumerateStrategies)->DenseRange(0, 7);

void BM_Decide(benchmark::State& state) {
    const auto v = dag::all_variants()[static_cast<std::size_t>(state.range(0))];
    const auto b = three_box_behavior();
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility::decide(b, v));
    }
    state.SetLabel(v.shorthand());
}
BENCHMARK(BM_Decide)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_Figure4(benchmark::State& state) {
    const auto b = three_box_behavior();
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility::figure4_report(b));
    }
}
BENCHMARK(BM_Figure4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
