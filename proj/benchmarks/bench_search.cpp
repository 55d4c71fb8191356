#include <benchmark/benchmark.h>

#include "holocount/catalog.hpp"
#include "holocount/count.hpp"

using namespace holocount;

namespace {
std::shared_ptr<const Group> make(const char* spec) {
  return std::make_shared<const Group>(build_group(spec));
}
}  // namespace

static void BM_ActionHomEnumeration(benchmark::State& state,
                                    const char* spec) {
  auto n = make(spec);
  auto a = automorphism_group(n);
  const GenChain& chain = default_chain(*n);
  for (auto _ : state) {
    int64_t count = 0;
    for_each_action_hom(*n, *a, chain, 1, 0, [&](const ActionHomView&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.SetLabel(spec);
}
BENCHMARK_CAPTURE(BM_ActionHomEnumeration, c2e3, "abelian:2,2,2");
BENCHMARK_CAPTURE(BM_ActionHomEnumeration, a4, "alt:4");
BENCHMARK_CAPTURE(BM_ActionHomEnumeration, c4x4, "abelian:4,4");

static void BM_CocycleEnumeration(benchmark::State& state) {
  // all bijective crossed homomorphisms for the inner action of A5
  auto n = make("alt:5");
  auto a = automorphism_group(n);
  std::vector<int32_t> action(n->order());
  for (Elem x = 0; x < n->order(); ++x) action[x] = a->conjIndex(x);
  auto perms = action_perms(*a, action);
  const GenChain& chain = default_chain(*n);
  for (auto _ : state) {
    CocycleSearchConfig cfg;
    cfg.g = n.get();
    cfg.n = n.get();
    cfg.actionPerms = perms.data();
    cfg.chain = &chain;
    cfg.mode = CocycleMode::Bijective;
    int64_t count = 0;
    enumerate_cocycles_chain(cfg, [&](const std::vector<int32_t>&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CocycleEnumeration);

static void BM_CountReg(benchmark::State& state, const char* gs,
                        const char* ns, bool prune) {
  auto g = make(gs);
  auto n = make(ns);
  automorphism_group(n);  // warm the caches
  automorphism_group(g);
  for (auto _ : state) {
    CountOptions opt;
    opt.workers = 2;
    opt.budgetSec = 0;
    opt.prune = prune;
    auto r = count_reg(g, n, opt);
    benchmark::DoNotOptimize(r.regCount);
  }
}
BENCHMARK_CAPTURE(BM_CountReg, a5_a5, "alt:5", "alt:5", true);
BENCHMARK_CAPTURE(BM_CountReg, s5_s5, "sym:5", "sym:5", true);
BENCHMARK_CAPTURE(BM_CountReg, c27_heis3_prune, "cyclic:27", "heis:3", true);
BENCHMARK_CAPTURE(BM_CountReg, c27_heis3_noprune, "cyclic:27", "heis:3",
                  false);
BENCHMARK_CAPTURE(BM_CountReg, c4x4_self, "abelian:4,4", "abelian:4,4", true);
