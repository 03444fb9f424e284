#include <benchmark/benchmark.h>

#include "udesign/construct.hpp"

namespace {

using namespace udesign;

void BM_IsUniversal(benchmark::State& state) {
  const Design u = pointed_design(9, 5, Prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_universal(u));
}
BENCHMARK(BM_IsUniversal)->Unit(benchmark::kMillisecond);

void BM_IsUniversalFast(benchmark::State& state) {
  const Design u = pointed_design(9, 5, Prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_universal_fast(u));
}
BENCHMARK(BM_IsUniversalFast)->Unit(benchmark::kMillisecond);

void BM_SolveJamesCanonical(benchmark::State& state) {
  const Prime p(static_cast<std::uint32_t>(state.range(2)));
  const auto a = static_cast<std::uint64_t>(state.range(0));
  const auto b = static_cast<std::uint64_t>(state.range(1));
  const Spectrum target = james_canonical_spectrum(a, b, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_design(static_cast<std::uint32_t>(a + b),
                                          static_cast<std::uint32_t>(b), p, target));
  }
}
BENCHMARK(BM_SolveJamesCanonical)->Args({7, 4, 2})->Args({8, 6, 3})->Unit(benchmark::kMillisecond);

}  // namespace
