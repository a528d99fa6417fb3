#include "rforge/geometry.hpp"
#include "rforge/walks.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_EnumerateReduced(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rforge::enumerate_reduced(d, n));
}
BENCHMARK(BM_EnumerateReduced)->Args({2, 3})->Args({3, 3})->Args({2, 4})->Args({4, 4})->Args({3, 5});

void BM_MinimalPrimes(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto ring = rforge::Ring::coefficients(d, n);
  std::vector<rforge::Monomial> leads;
  for (const auto& w : rforge::enumerate_reduced(d, n)) leads.push_back(rforge::walk_leading_monomial(w, *ring));
  rforge::SquareFreeMonomialIdeal ideal(std::move(leads));
  for (auto _ : state) benchmark::DoNotOptimize(rforge::minimal_primes(ideal));
}
BENCHMARK(BM_MinimalPrimes)->Args({2, 3})->Args({3, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_ChowDegree(benchmark::State& state) {
  std::vector<int> degrees(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(rforge::chow_degree(degrees));
}
BENCHMARK(BM_ChowDegree)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
