// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "grh/hadamard.hpp"
#include "grh/search.hpp"

namespace {

grh::SearchConfig config(std::size_t m, bool filtered) {
  grh::SearchConfig c;
  c.order = m;
  if (!filtered) {
    c.filters = grh::SearchFilters::none();
    c.final_check = grh::FinalCheck::Gram;
  }
  return c;
}

void BM_SearchParallel(benchmark::State& state) {
  const auto c = config(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(grh::search(c));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto c = config(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(grh::search_serial(c));
}

grh::SignMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& r : rows)
    for (auto& v : r) v = (rng() & 1) ? 1 : -1;
  return grh::SignMatrix::from_rows(rows);
}

void BM_GramParallel(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grh::gram(m));
}

void BM_GramSerial(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grh::gram_serial(m));
}

}  // namespace

BENCHMARK(BM_SearchParallel)->Args({12, 1})->Args({16, 1})->Args({12, 0})->Args({16, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Args({12, 1})->Args({16, 1})->Args({12, 0})->Args({16, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramParallel)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
