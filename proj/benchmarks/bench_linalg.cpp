#include <benchmark/benchmark.h>

#include <numeric>

#include "udesign/fplinalg.hpp"
#include "udesign/subsets.hpp"

namespace {

using namespace udesign;

// Stacked inclusion system for all levels below b, the matrix behind the coefficient space.
FpMatrix stacked(std::uint32_t v, std::uint32_t b, std::uint32_t p) {
  std::vector<std::uint32_t> levels(b);
  std::iota(levels.begin(), levels.end(), 0u);
  return stacked_inclusion(b, levels, v, Prime(p));
}

void BM_RrefStacked(benchmark::State& state) {
  const auto v = static_cast<std::uint32_t>(state.range(0));
  const FpMatrix m = stacked(v, v / 2, static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BM_RrefStacked)->ArgsProduct({{8, 10, 12}, {2, 3, 65521}})->Unit(benchmark::kMillisecond);

void BM_InclusionApply(benchmark::State& state) {
  const std::uint32_t v = 16, b = 8;
  const auto j = static_cast<std::uint32_t>(state.range(0));
  const auto strategy = static_cast<ApplyStrategy>(state.range(1));
  const Prime p(3);
  FpVector u(binomial(v, b));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<Residue>(i % 3);
  for (auto _ : state) benchmark::DoNotOptimize(inclusion_apply(u, b, j, v, p, strategy));
}
BENCHMARK(BM_InclusionApply)
    ->ArgsProduct({{1, 4, 7}, {static_cast<int>(ApplyStrategy::SupersetsPerRow),
                               static_cast<int>(ApplyStrategy::SubsetsPerColumn)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
