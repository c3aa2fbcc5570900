#include "eddeg/catalecticant.hpp"
#include "eddeg/solver.hpp"

#include <benchmark/benchmark.h>

using namespace eddeg;

namespace {

void track(benchmark::State& state, Execution mode) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto ed = build_ed_critical_system(n, 20221);
  std::mt19937_64 rng(7);
  const TotalDegreeHomotopy hom(ed.system, rng);
  const auto starts = hom.start_roots();
  const TrackerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(track_all(hom, starts, cfg, mode));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(starts.size()));
}

void BM_TrackSerial(benchmark::State& state) { track(state, Execution::Serial); }
void BM_TrackParallel(benchmark::State& state) { track(state, Execution::Parallel); }

void BM_BuildQuartic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_quartic(static_cast<unsigned>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_TrackSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrackParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildQuartic)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
