#include "symcurv/curvature_report.hpp"

#include <benchmark/benchmark.h>

using namespace symcurv;

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(LieType::parse("E8")));
}
BENCHMARK(BM_RootSystemE8)->Unit(benchmark::kMillisecond);

static void BM_ReportAII(benchmark::State& state) {
  SpaceSpec s = resolve(Label::AII, {static_cast<int>(state.range(0))});
  RootSystem rs(s.lie_type);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_report(s, rs));
}
BENCHMARK(BM_ReportAII)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ReportEVIII(benchmark::State& state) {
  SpaceSpec s = resolve(Label::EVIII);
  RootSystem rs(s.lie_type);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_report(s, rs));
}
BENCHMARK(BM_ReportEVIII)->Unit(benchmark::kMillisecond);

static void BM_FullTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(curvature_table());
}
BENCHMARK(BM_FullTable)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
