#include <benchmark/benchmark.h>

#include "holocount/catalog.hpp"
#include "holocount/morphisms.hpp"

using namespace holocount;

static void BM_BuildGroup(benchmark::State& state, const char* spec) {
  for (auto _ : state) {
    Group g = build_group(spec);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK_CAPTURE(BM_BuildGroup, sl2_5, "sl2:5");
BENCHMARK_CAPTURE(BM_BuildGroup, sym5, "sym:5");
BENCHMARK_CAPTURE(BM_BuildGroup, c2e4, "abelian:2,2,2,2");
BENCHMARK_CAPTURE(BM_BuildGroup, dihedral60, "dihedral:60");

static void BM_AutomorphismGroup(benchmark::State& state, const char* spec) {
  // fresh table each round so the table-hash cache stays cold only once;
  // steady-state rounds measure the cache-hit path plus hashing
  auto g = std::make_shared<const Group>(build_group(spec));
  automorphism_group(g);  // warm
  for (auto _ : state) {
    auto a = automorphism_group(g);
    benchmark::DoNotOptimize(a->size());
  }
}
BENCHMARK_CAPTURE(BM_AutomorphismGroup, a5, "alt:5");
BENCHMARK_CAPTURE(BM_AutomorphismGroup, c2e4, "abelian:2,2,2,2");

static void BM_AutomorphismEnumeration(benchmark::State& state,
                                       const char* spec) {
  Group g = build_group(spec);
  GroupCarrier hc{&g};
  const GenChain& chain = default_chain(g);
  std::vector<std::vector<int32_t>> cands(chain.levels());
  for (int i = 0; i < chain.levels(); ++i) {
    uint64_t fp = g.fingerprint(chain.gens[i]);
    for (Elem x = 0; x < g.order(); ++x)
      if (g.fingerprint(x) == fp) cands[i].push_back(x);
  }
  for (auto _ : state) {
    HomSearchConfig<GroupCarrier> cfg;
    cfg.g = &g;
    cfg.h = &hc;
    cfg.chain = &chain;
    cfg.filter = HomFilter::Injective;
    cfg.candsOverride = &cands;
    int64_t count = 0;
    enumerate_homs_chain<GroupCarrier>(cfg,
                                       [&](const std::vector<int32_t>&) {
                                         ++count;
                                         return true;
                                       });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK_CAPTURE(BM_AutomorphismEnumeration, d60, "dihedral:60");
BENCHMARK_CAPTURE(BM_AutomorphismEnumeration, a5, "alt:5");

static void BM_FindIsomorphism(benchmark::State& state) {
  Group a = build_group("product:quaternion:8,cyclic:2");
  Group b = build_group("c4xc4semi");  // same order profile, not isomorphic
  for (auto _ : state) {
    auto iso = find_isomorphism(a, b);
    benchmark::DoNotOptimize(iso.has_value());
  }
}
BENCHMARK(BM_FindIsomorphism);
