#include "holocount/count.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace holocount {

namespace {

struct SubgroupStat {
  int64_t homCount = 0;
  std::vector<int32_t> fImage, gImage;  // lexicographically least rep

  void offer(const std::vector<int32_t>& f, const std::vector<int32_t>& g) {
    ++homCount;
    if (fImage.empty() || std::tie(f, g) < std::tie(fImage, gImage)) {
      fImage = f;
      gImage = g;
    }
  }
  void merge(SubgroupStat&& o) {
    homCount += o.homCount;
    if (fImage.empty() ||
        std::tie(o.fImage, o.gImage) < std::tie(fImage, gImage)) {
      fImage = std::move(o.fImage);
      gImage = std::move(o.gImage);
    }
  }
};

struct WorkerState {
  int64_t regCount = 0;
  int64_t pruned = 0;
  int64_t modCharChecked = 0, modCharFailed = 0;
  std::map<std::vector<int32_t>, SubgroupStat> subgroups;
};

}  // namespace

RegReport count_reg(const std::shared_ptr<const Group>& gp,
                    const std::shared_ptr<const Group>& np,
                    const CountOptions& opt) {
  const Group& g = *gp;
  const Group& n = *np;
  require(g.order() == n.order(),
          "count_reg needs |G| == |N| (same-order hypothesis)");
  auto t0 = std::chrono::steady_clock::now();

  auto autN = automorphism_group(np);
  auto autG = automorphism_group(gp);
  auto hol = build_holomorph(np);

  RegReport rep;
  rep.g = g.label();
  rep.n = n.label();
  rep.autG = autG->size();
  rep.autN = autN->size();

  // pruning state: one precomp per nontrivial proper characteristic M
  std::vector<SubgroupHandle> pruneMs;
  CharSubgroupList charList;
  // shared read-only reduction precomps for the assertion mode
  std::vector<std::pair<const SubgroupHandle*, std::shared_ptr<PrunePrecomp>>>
      assertPres;
  if (opt.prune || opt.assertLemma41) {
    charList = characteristic_subgroups(n, *autN);
    if (opt.prune) {
      for (auto& m : charList.subgroups) {
        if (m.size() == n.order()) continue;
        pruneMs.push_back(m);  // M = 1 is kept for the cyclic fast path
      }
    }
    if (opt.assertLemma41) {
      for (auto& m : charList.subgroups) {
        if (m.size() == n.order()) continue;
        assertPres.emplace_back(&m, prepare_prune(gp, np, autN, m));
      }
    }
  }

  const GenChain& chain = default_chain(g);
  const int workers = std::max(1, opt.workers);
  std::atomic<bool> budgetExceeded{false};
  const bool hasBudget = opt.budgetSec > 0;

  auto runWorker = [&](int w, WorkerState& st) {
    // mutex-free: each worker owns the level-0 candidates with
    // index % workers == w and runs the full nested search on them
    CocycleSearchConfig ccfg;
    ccfg.g = &g;
    ccfg.n = &n;
    ccfg.chain = &chain;
    ccfg.mode = CocycleMode::Bijective;

    // thread-local prune memos (deterministic results, shared nothing)
    std::vector<std::shared_ptr<PrunePrecomp>> myPrunes;
    bool unconditional = false;
    for (auto& m : pruneMs) {
      auto pr = prepare_prune(gp, np, autN, m);
      unconditional = unconditional || prune_is_unconditional(*pr);
      if (prune_is_usable(*pr)) myPrunes.push_back(std::move(pr));
    }

    std::vector<int32_t> codes(g.order());
    int sinceCheck = 0;
    for_each_action_hom(
        g, *autN, chain, workers, w, [&](const ActionHomView& f) {
          if (hasBudget && ++sinceCheck >= 64) {
            sinceCheck = 0;
            auto el = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (el > opt.budgetSec)
              budgetExceeded.store(true, std::memory_order_relaxed);
          }
          if (budgetExceeded.load(std::memory_order_relaxed)) return false;

          if (unconditional) {
            ++st.pruned;
            return true;
          }
          for (auto& pr : myPrunes) {
            if (quotient_prune(*pr, f.indices())) {
              ++st.pruned;
              return true;
            }
          }

          ccfg.actionPerms = f.perms->data();
          enumerate_cocycles_chain(ccfg, [&](const std::vector<int32_t>& gg) {
            ++st.regCount;
            const auto& fIdx = f.indices();
            for (Elem x = 0; x < g.order(); ++x)
              codes[x] = hol->encode(gg[x], fIdx[x]);
            std::sort(codes.begin(), codes.end());
            st.subgroups[codes].offer(fIdx, gg);

            if (opt.assertLemma41 &&
                st.modCharChecked < opt.witnessCap * int64_t(8)) {
              CrossedHom c{&g, &n, autN.get(), fIdx, gg};
              for (auto& [m, pre] : assertPres) {
                auto rp = reduce_pair_prepared(*pre, fIdx, gg);
                auto checks = verify_mod_char(rp, c, *m);
                ++st.modCharChecked;
                if (!checks.all()) ++st.modCharFailed;
              }
            }
            return true;
          });
          return true;
        });
  };

  std::vector<WorkerState> states(workers);
  if (workers == 1) {
    runWorker(0, states[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] { runWorker(w, states[w]); });
    for (auto& t : threads) t.join();
  }

  std::map<std::vector<int32_t>, SubgroupStat> merged;
  for (auto& st : states) {
    rep.regCount += st.regCount;
    rep.prunedBranches += st.pruned;
    rep.modCharChecked += st.modCharChecked;
    rep.modCharFailed += st.modCharFailed;
    for (auto& [k, v] : st.subgroups) merged[k].merge(std::move(v));
  }
  rep.authoritative = !budgetExceeded.load();

  if (rep.authoritative) {
    require(rep.regCount % rep.autN == 0,
            "|Reg| not divisible by |Aut(N)| (bug)");
    require(rep.regCount % rep.autG == 0,
            "|Reg| not divisible by |Aut(G)| (bug)");
    rep.eValue = rep.regCount / rep.autN;
    rep.subgroupCount = int64_t(merged.size());
    require(rep.subgroupCount * rep.autG == rep.regCount,
            "distinct images != |Reg|/|Aut(G)| (bug)");
  }

  auto rl = canonical_rho_lambda(*hol);
  for (auto& [codes, stat] : merged) {
    if (codes == rl.first)
      ++rep.rhoCount;
    else if (codes == rl.second)
      ++rep.lambdaCount;
    else
      ++rep.otherCount;
    if (int64_t(rep.witnesses.size()) < opt.witnessCap) {
      rep.witnesses.push_back(RegReport::Witness{
          codes, std::move(stat.fImage), std::move(stat.gImage),
          stat.homCount});
    } else {
      ++rep.witnessesDropped;
    }
  }
  require(rep.rhoCount <= 1 && rep.lambdaCount <= 1,
          "rho/lambda classified more than once (bug)");

  rep.elapsedMs =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace holocount
