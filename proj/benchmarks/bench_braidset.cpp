#include <benchmark/benchmark.h>

#include <algorithm>

#include "braidset/catalog.hpp"
#include "braidset/conditions.hpp"
#include "braidset/extension.hpp"
#include "braidset/graph.hpp"
#include "braidset/monoid.hpp"

using namespace braidset;

static void BM_YbeCheck(benchmark::State& state) {
  auto z = sec5_extension(state.range(0)).assembled;
  for (auto _ : state) benchmark::DoNotOptimize(holds(z, Condition::ybe));
  state.SetItemsProcessed(state.iterations() * z.size() * z.size() * z.size());
}
BENCHMARK(BM_YbeCheck)->Arg(1)->Arg(3);

static void BM_Classify(benchmark::State& state) {
  auto x = sec5_x();
  for (auto _ : state) benchmark::DoNotOptimize(classify(x, 1));
}
BENCHMARK(BM_Classify);

static void BM_TruncatedMonoid(benchmark::State& state) {
  auto x = sec5_x();
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedMonoid tm(x, degree);
    benchmark::DoNotOptimize(tm.class_count(degree));
  }
}
BENCHMARK(BM_TruncatedMonoid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MatchedPair(benchmark::State& state) {
  TruncatedMonoid tm(catalog_entry("perm_sym3").solution, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_matched_pair(tm, 3).all_hold());
}
BENCHMARK(BM_MatchedPair)->Unit(benchmark::kMillisecond);

static void BM_BuildExtension(benchmark::State& state) {
  auto x = sec5_x(), y = sec5_y();
  auto fam = sec5_family();
  auto g = family_ground(x, y, fam, sec5_choice(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(x, y, g));
}
BENCHMARK(BM_BuildExtension);

static void BM_FamilyEnumeration(benchmark::State& state) {
  auto x = sec5_x(), y = sec5_y();
  auto fam = sec5_family();
  EnumerationOptions opt;
  opt.mode = EnumerationMode::permutation_family;
  opt.family = &fam;
  opt.filters = {ExtensionFilter::ybe};
  for (auto _ : state) {
    auto s = enumerate_extensions(x, y, opt, [](const ExtensionSet&) { return true; });
    benchmark::DoNotOptimize(s.emitted);
  }
}
BENCHMARK(BM_FamilyEnumeration)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_FindIsomorphism(benchmark::State& state) {
  auto z = sec5_extension(3).assembled;
  Perm phi = identity_perm(z.size());
  std::reverse(phi.begin(), phi.end());
  auto c = conjugate(z, phi, "copy");
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(z, c));
}
BENCHMARK(BM_FindIsomorphism)->Unit(benchmark::kMicrosecond);

static void BM_NonIsomorphic(benchmark::State& state) {
  auto z1 = sec5_extension(1).assembled, z2 = sec5_extension(2).assembled;
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(z1, z2));
}
BENCHMARK(BM_NonIsomorphic)->Unit(benchmark::kMicrosecond);

static void BM_Automorphisms(benchmark::State& state) {
  auto x = sec5_x();
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(x).size());
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
