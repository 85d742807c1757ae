#include <benchmark/benchmark.h>

#include <vector>

#include "permlll/permutation.hpp"
#include "permlll/rng.hpp"

namespace {

void BM_RandomPermutation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  permlll::Rng rng(17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(permlll::random_permutation(n, rng));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RandomPermutation)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

void BM_SwapPrefix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  permlll::Rng rng(17);
  permlll::Permutation pi = permlll::random_permutation(n, rng);
  std::vector<int> xs(r);
  for (int i = 0; i < r; ++i) xs[i] = i;
  for (auto _ : state) {
    permlll::swap_with(pi, xs, rng, [](int, int, int) {});
    benchmark::DoNotOptimize(pi);
  }
  state.SetItemsProcessed(state.iterations() * r);
}
BENCHMARK(BM_SwapPrefix)->Args({256, 2})->Args({256, 8})->Args({4096, 2})->Args({4096, 8});

void BM_DrawExcluding(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  permlll::Rng rng(17);
  std::vector<int> excluded;
  for (int i = 0; i < 8; ++i) excluded.push_back(i * (n / 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(permlll::draw_excluding(rng, n, excluded));
  }
}
BENCHMARK(BM_DrawExcluding)->Arg(64)->Arg(4096);

}  // namespace
