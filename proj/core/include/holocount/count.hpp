#ifndef HOLOCOUNT_COUNT_HPP_
#define HOLOCOUNT_COUNT_HPP_

#include <map>

#include "holocount/reduction.hpp"

namespace holocount {

struct CountOptions {
  bool prune = true;
  int workers = 1;
  double budgetSec = 300.0;   // <= 0 means unlimited
  int64_t witnessCap = 10000; // retained (f,g) representatives
  bool assertLemma41 = false; // verify Lemma-style clauses on witnesses
};

struct RegReport {
  std::string g, n;
  int64_t regCount = 0;       // |Reg(G, Hol(N))|, raw (f,g) pairs
  int64_t autG = 0, autN = 0;
  int64_t eValue = 0;         // regCount / |Aut(N)|
  int64_t subgroupCount = 0;  // regCount / |Aut(G)| = distinct images
  int64_t rhoCount = 0, lambdaCount = 0, otherCount = 0;
  int64_t prunedBranches = 0;
  double elapsedMs = 0;
  bool authoritative = true;

  // per-subgroup witness data, canonical order; capped by witnessCap
  struct Witness {
    std::vector<int32_t> subgroupCodes;  // sorted codes in Hol(N)
    std::vector<int32_t> fImage, gImage; // lexicographically least rep
    int64_t homCount = 0;                // always |Aut(G)|
  };
  std::vector<Witness> witnesses;
  int64_t witnessesDropped = 0;

  int64_t modCharChecked = 0, modCharFailed = 0;  // assertion mode stats
};

// Counts Reg(G, Hol(N)) by iterating actions f in Hom(G, Aut(N)) and, for
// each, the bijective crossed homomorphisms; dedupes witnesses into
// subgroups of Hol(N) and classifies them against rho(N) and lambda(N).
// Throws on |G| != |N|. Counting is raw (no orbit quotienting); pruning
// must not change any count. Deterministic for any worker count.
RegReport count_reg(const std::shared_ptr<const Group>& g,
                    const std::shared_ptr<const Group>& n,
                    const CountOptions& opt = {});

std::string report_to_json(const RegReport& r, bool withWitnesses = false);
std::string report_csv_header();
std::string report_to_csv_row(const RegReport& r);
std::string report_to_text(const RegReport& r);

}  // namespace holocount

#endif  // HOLOCOUNT_COUNT_HPP_
