#include <benchmark/benchmark.h>

#include "holocount/catalog.hpp"
#include "holocount/oracle.hpp"

using namespace holocount;

static void BM_BruteGpCount(benchmark::State& state, const char* spec) {
  Group g = build_group(spec);
  for (auto _ : state) {
    int64_t c = brute_gp_count(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK_CAPTURE(BM_BruteGpCount, c6, "cyclic:6");
BENCHMARK_CAPTURE(BM_BruteGpCount, s3, "sym:3");

static void BM_RegularSubgroupsHol(benchmark::State& state,
                                   const char* spec) {
  // the cache is keyed by object identity, so a fresh group per round
  // measures the full search
  for (auto _ : state) {
    auto n = std::make_shared<const Group>(build_group(spec));
    const auto& subs = regular_subgroups_hol(n, 24);
    benchmark::DoNotOptimize(subs.size());
  }
}
BENCHMARK_CAPTURE(BM_RegularSubgroupsHol, c2e3, "abelian:2,2,2");
BENCHMARK_CAPTURE(BM_RegularSubgroupsHol, d6, "dihedral:6");
BENCHMARK_CAPTURE(BM_RegularSubgroupsHol, q8, "quaternion:8");

BENCHMARK_MAIN();
