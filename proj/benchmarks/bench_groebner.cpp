#include "rforge/groebner.hpp"
#include "rforge/minors.hpp"
#include "rforge/ordering.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CertifyG(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto g = rforge::polys_of(rforge::generators_for_basis(d, n));
  auto order = rforge::diagonal_order(rforge::build_diagonal_weights(d, n));
  for (auto _ : state) benchmark::DoNotOptimize(rforge::certify_groebner(g, order));
  state.counters["basis"] = static_cast<double>(g.size());
}
BENCHMARK(BM_CertifyG)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

// Buchberger from the full minor list down to G.
void BM_BuchbergerDiagonal(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto gens = rforge::polys_of(rforge::enumerate_generators(d, n));
  auto order = rforge::diagonal_order(rforge::build_diagonal_weights(d, n));
  for (auto _ : state) benchmark::DoNotOptimize(rforge::buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerDiagonal)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_BuchbergerDegrevlex(benchmark::State& state) {
  auto ring = rforge::Ring::coefficients(2, 3);
  auto gens = rforge::polys_of(rforge::enumerate_generators(2, 3));
  auto order = rforge::column_major_degrevlex(ring);
  for (auto _ : state) benchmark::DoNotOptimize(rforge::buchberger(gens, order));
}
BENCHMARK(BM_BuchbergerDegrevlex)->Unit(benchmark::kMillisecond);

void BM_EliminateX(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rforge::eliminate_x(d, n));
}
BENCHMARK(BM_EliminateX)->Args({1, 2})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
