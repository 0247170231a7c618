#include <benchmark/benchmark.h>

#include "algdyn/classify.hpp"
#include "algdyn/entropy.hpp"
#include "algdyn/factor.hpp"
#include "algdyn/jordan.hpp"

using namespace algdyn;

namespace {

// Swinnerton-Dyer type: irreducible, but splits into small factors mod every prime.
RatPoly swinnerton_dyer() { return RatPoly::from_ints({1, 0, -10, 0, 1}); }

QMatrix cyclic_shift(std::size_t m) {
  QMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) a((i + 1) % m, i) = Rat(i == 0 ? 2 : 1);
  return a;
}

SolenoidAction times23() {
  return SolenoidAction::make({QMatrix::scalar(1, Rat(2)), QMatrix::scalar(1, Rat(3))});
}

SolenoidAction sqrt2_units() {
  return SolenoidAction::make({QMatrix::from_ints({{1, 2}, {1, 1}}), QMatrix::from_ints({{3, 2}, {1, 3}})});
}

}  // namespace

static void BM_FactorSwinnertonDyer(benchmark::State& state) {
  RatPoly f = swinnerton_dyer();
  RatPoly g = f * f.compose(RatPoly::from_ints({1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(factor_poly(g));
}
BENCHMARK(BM_FactorSwinnertonDyer);

static void BM_Charpoly(benchmark::State& state) {
  QMatrix a = cyclic_shift(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(a));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(16);

static void BM_JordanChevalley(benchmark::State& state) {
  QMatrix c = QMatrix::companion(RatPoly::from_ints({-2, 0, 1}));
  QMatrix a = block_diag(c, c);
  a(0, 2) = 1;
  a(1, 3) = 1;
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(a));
}
BENCHMARK(BM_JordanChevalley);

static void BM_AnalyzeWeights(benchmark::State& state) {
  auto a = sqrt2_units();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_weights(a));
}
BENCHMARK(BM_AnalyzeWeights);

static void BM_HaarEntropyGrid(benchmark::State& state) {
  auto wa = analyze_weights(times23());
  auto grid = sample_grid(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& n : grid) benchmark::DoNotOptimize(haar_entropy(wa, n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_HaarEntropyGrid)->Arg(2)->Arg(4);

static void BM_VirtuallyCyclic(benchmark::State& state) {
  auto a = sqrt2_units();
  for (auto _ : state) benchmark::DoNotOptimize(virtually_cyclic(a, ClassifyConfig{}));
}
BENCHMARK(BM_VirtuallyCyclic);
