#include <benchmark/benchmark.h>

#include "irindex/abelian.hpp"
#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/duality.hpp"
#include "irindex/sample.hpp"
#include "irindex/univariate.hpp"

using namespace irindex;

namespace {

void BM_Decompose(benchmark::State& state) {
  const auto ideals = random_ideals(1, 200, static_cast<std::size_t>(state.range(0)), 5, 6);
  for (auto _ : state) {
    for (const auto& I : ideals) benchmark::DoNotOptimize(decompose(I));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ideals.size()));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(3)->Arg(4);

void BM_BassSum(benchmark::State& state) {
  const auto ideals = random_ideals(2, 200, 4, 5, 6);
  for (auto _ : state) {
    for (const auto& I : ideals) benchmark::DoNotOptimize(reducibility_index_by_bass(I));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ideals.size()));
}
BENCHMARK(BM_BassSum);

void BM_MinCover(benchmark::State& state) {
  std::vector<Staircase> gs;
  for (const auto& I : random_artinian_ideals(3, 100, 3, 3, 3)) {
    auto g = staircase(I);
    if (g.size() <= kMinCoverCap) gs.push_back(std::move(g));
  }
  for (auto _ : state) {
    for (const auto& g : gs) benchmark::DoNotOptimize(min_cover_oracle(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gs.size()));
}
BENCHMARK(BM_MinCover);

void BM_Factor(benchmark::State& state) {
  const PolyRing ring(FiniteField::prime(2));
  std::vector<UniPoly> polys;
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (std::uint32_t bits = 0; bits < (1u << degree); ++bits) {
    std::vector<FiniteField::Element> c(degree + 1, 0);
    for (std::size_t i = 0; i < degree; ++i) c[i] = (bits >> i) & 1;
    c[degree] = 1;
    polys.emplace_back(std::move(c));
  }
  for (auto _ : state) {
    for (const auto& f : polys) benchmark::DoNotOptimize(factor(ring, f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_Factor)->Arg(6)->Arg(8);

void BM_AbelianBruteForce(benchmark::State& state) {
  const auto groups = groups_up_to(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& g : groups) benchmark::DoNotOptimize(sum_reducibility_index_bruteforce(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(groups.size()));
}
BENCHMARK(BM_AbelianBruteForce)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
