#include <benchmark/benchmark.h>

#include "lubell/constructions.hpp"
#include "lubell/extract.hpp"
#include "lubell/family.hpp"
#include "lubell/search.hpp"

using namespace lubell;

namespace {

SetFamily full_cube(int n) {
  std::vector<int> ks;
  for (int k = 0; k <= n; ++k) ks.push_back(k);
  return levels(n, ks);
}

void BM_LubellMass(benchmark::State& state) {
  SetFamily f = full_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lubell_mass(f));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_LubellMass)->Arg(10)->Arg(14)->Arg(18);

void BM_ChainHitProbability(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SetFamily f = levels(n, {n / 2, n / 2 + 1});
  for (auto _ : state) benchmark::DoNotOptimize(chain_hit_probability(f));
}
BENCHMARK(BM_ChainHitProbability)->Arg(10)->Arg(14)->Arg(16);

void BM_DiamondFreeCheck(benchmark::State& state) {
  SetFamily f = b2_lower(static_cast<int>(state.range(0)),
                         {state.range(0) / 4, state.range(0) / 2,
                          state.range(0) - state.range(0) / 4 - state.range(0) / 2});
  Poset diamond = boolean_poset(2);
  for (auto _ : state) benchmark::DoNotOptimize(is_p_free(f, diamond));
}
BENCHMARK(BM_DiamondFreeCheck)->Arg(10)->Arg(12)->Arg(14);

void BM_MaxInterval(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<int> ks;
  for (int k = 0; k < n; ++k) ks.push_back(k);
  SetFamily f = levels(n, ks);
  for (auto _ : state) benchmark::DoNotOptimize(max_interval(f));
}
BENCHMARK(BM_MaxInterval)->Arg(7)->Arg(8)->Arg(9);

void BM_LaStarChain3(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(la_star_exact(n, chain(3)));
}
BENCHMARK(BM_LaStarChain3)->Arg(4)->Arg(5);

void BM_ExtractStdExample(benchmark::State& state) {
  SetFamily f = levels(10, {0, 1, 2, 3, 4, 5});
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_std_example(f, 1, Rat(1, 2), Rat(1, 2)));
}
BENCHMARK(BM_ExtractStdExample);

void BM_PrivateSystem(benchmark::State& state) {
  SetFamily f = levels(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(private_system(f, 2));
}
BENCHMARK(BM_PrivateSystem)->Arg(8)->Arg(12);

void BM_ThetaSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SetFamily f = full_cube(n);
  for (auto _ : state) {
    Rat total(0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) total += theta_pair(f, i, j);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ThetaSweep)->Arg(8)->Arg(10);

}  // namespace
