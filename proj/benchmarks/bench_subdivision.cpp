#include <benchmark/benchmark.h>

#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

void BM_Barycentric(benchmark::State& state) {
  const auto c = simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(barycentric(c));
}
BENCHMARK(BM_Barycentric)->DenseRange(2, 5);

void BM_Edgewise(benchmark::State& state) {
  const auto c = rp2_six();
  for (auto _ : state) benchmark::DoNotOptimize(edgewise(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Edgewise)->DenseRange(2, 6, 2);

}  // namespace
