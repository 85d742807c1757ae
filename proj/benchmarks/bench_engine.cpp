#include <benchmark/benchmark.h>

#include <cstdint>

#include "permlll/apps/generate.hpp"
#include "permlll/apps/transversals.hpp"
#include "permlll/engine.hpp"
#include "permlll/events.hpp"

namespace {

void BM_LatinTransversal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int delta = static_cast<int>(state.range(1));
  const permlll::apps::ColorMatrix m = permlll::apps::diagonal_run_matrix(n, delta);
  std::uint64_t seed = 0;
  std::uint64_t resamples = 0;
  for (auto _ : state) {
    permlll::apps::AppConfig config;
    config.seed = seed++;
    config.record_log = false;
    const auto r = permlll::apps::solve_latin(m, config);
    resamples += r.resamplings;
    benchmark::DoNotOptimize(r.columns);
  }
  state.counters["resamples/run"] =
      benchmark::Counter(static_cast<double>(resamples) / static_cast<double>(state.iterations()));
}
BENCHMARK(BM_LatinTransversal)->Args({64, 6})->Args({128, 13})->Args({256, 27})
    ->Unit(benchmark::kMillisecond);

void BM_EngineTinyInstance(benchmark::State& state) {
  const std::vector<int> sizes = {4};
  std::vector<permlll::BadEvent> events;
  events.push_back(permlll::BadEvent::make(1, {{0, 0, 0}}, sizes));
  events.push_back(permlll::BadEvent::make(2, {{0, 0, 1}}, sizes));
  events.push_back(permlll::BadEvent::make(3, {{0, 2, 2}}, sizes));
  const permlll::EventIndex index(sizes, events);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    permlll::ExplicitOracle oracle{index};
    permlll::EngineConfig config;
    config.seed = seed++;
    config.record_log = false;
    benchmark::DoNotOptimize(permlll::run(oracle, config));
  }
}
BENCHMARK(BM_EngineTinyInstance);

}  // namespace

BENCHMARK_MAIN();
