#include <benchmark/benchmark.h>

#include "ssarr/algebra.hpp"
#include "ssarr/campaign.hpp"
#include "ssarr/families.hpp"
#include "ssarr/isomorphism.hpp"
#include "ssarr/wclass.hpp"

using namespace ssarr;

static void BM_BuildLattice(benchmark::State& state) {
  const Arrangement a = full_monomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(a));
  state.SetLabel("d=" + std::to_string(a.size()));
}
BENCHMARK(BM_BuildLattice)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_LatticeIsomorphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Lattice a = build_lattice(a_of_w(n, std::vector<int>{0, 1}));
  const Lattice b = build_lattice(a_of_w(n, std::vector<int>{0, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_isomorphic(a, b));
}
BENCHMARK(BM_LatticeIsomorphic)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_RecoverClass(benchmark::State& state) {
  const Arrangement a = a_of_w(static_cast<int>(state.range(0)), std::vector<int>{0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(recover_class(a));
}
BENCHMARK(BM_RecoverClass)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_MdrCertified(benchmark::State& state) {
  const Arrangement a = full_monomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mdr(a));
}
BENCHMARK(BM_MdrCertified)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_MdrExact(benchmark::State& state) {
  const Arrangement a = full_monomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mdr_exact(a));
}
BENCHMARK(BM_MdrExact)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_MultiExponents(benchmark::State& state) {
  const Arrangement a = full_monomial(static_cast<int>(state.range(0)));
  const MultiRestriction r = ziegler_restriction(a, 0);
  for (auto _ : state) benchmark::DoNotOptimize(multi_exponents(r));
}
BENCHMARK(BM_MultiExponents)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_Campaign(benchmark::State& state) {
  CampaignOptions o;
  o.max_n = 4;
  o.max_dprime = 4;
  o.max_e = 1;
  o.seeds = 2;
  o.transforms = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign("thm1b-roundtrip", o));
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
