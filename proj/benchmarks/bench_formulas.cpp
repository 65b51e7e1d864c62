#include <benchmark/benchmark.h>

#include "sdbetti/formulas.hpp"

using namespace sdbetti;

namespace {

void BM_MClosed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int j = 1; j < d; ++j) benchmark::DoNotOptimize(m_closed(d, j));
  }
}
BENCHMARK(BM_MClosed)->Arg(8)->Arg(16);

void BM_MBruteforce(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int j = 1; j < d; ++j) benchmark::DoNotOptimize(m_bruteforce(d, j));
  }
}
BENCHMARK(BM_MBruteforce)->Arg(8)->Arg(12);

}  // namespace
