#include "rforge/cascade.hpp"
#include "rforge/minors.hpp"
#include "rforge/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EnumerateGenerators(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    auto gens = rforge::enumerate_generators(d, n);
    count = gens.size();
    benchmark::DoNotOptimize(gens);
  }
  state.counters["generators"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateGenerators)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_SylvesterResultant(benchmark::State& state) {
  auto ring = rforge::Ring::coefficients(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rforge::sylvester_resultant(ring, 1, 2));
}
BENCHMARK(BM_SylvesterResultant)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MembershipScan(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  rforge::MembershipScanner scanner(d, n);
  auto sample = rforge::sample_planted(d, n, 7).tuple;
  for (auto _ : state) benchmark::DoNotOptimize(scanner.scan(sample));
}
BENCHMARK(BM_MembershipScan)->Args({2, 3})->Args({3, 3})->Args({2, 4});

}  // namespace

BENCHMARK_MAIN();
