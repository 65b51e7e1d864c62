#include <benchmark/benchmark.h>

#include "sdbetti/hochster.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

const SimplicialComplex& sd3() {
  static const auto c = barycentric(simplex(3));
  return c;
}

// Argument 0 is Q, otherwise the characteristic.
FieldSpec field_arg(std::int64_t p) { return p == 0 ? FieldSpec::rationals() : FieldSpec::gf(static_cast<std::uint32_t>(p)); }

void BM_TableSd3(benchmark::State& state) {
  const auto field = field_arg(state.range(0));
  HochsterOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti_table(sd3(), field, options));
}
BENCHMARK(BM_TableSd3)->Arg(2)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_TableEdgewiseD2(benchmark::State& state) {
  const auto c = edgewise(simplex(2), static_cast<int>(state.range(0)));
  HochsterOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti_table(c, FieldSpec::gf(2), options));
}
BENCHMARK(BM_TableEdgewiseD2)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_ReducedBetti(benchmark::State& state) {
  const auto c = barycentric_iter(rp2_six(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(c, FieldSpec::rationals()));
}
BENCHMARK(BM_ReducedBetti)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace
