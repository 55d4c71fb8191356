#include "holocount/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <unordered_set>

namespace holocount {

namespace {

// DFS over partial regular subgroups of Hol(N). Every non-identity member
// of a regular subgroup is fixed point free, so a pair is admissible only
// while that holds; the least-uncovered-translation rule makes each
// subgroup reachable by exactly one branch sequence.
struct HolRegSearch {
  const Holomorph& hol;
  const Group& n;
  int32_t nAut;
  std::vector<uint8_t> fpf;  // fpf[a * nAut + phi]
  std::vector<std::vector<int32_t>> feasible;  // per translation a
  std::vector<std::vector<int32_t>> found;

  std::unordered_set<int32_t> inSet;
  std::vector<int32_t> members;
  std::vector<uint8_t> transSeen;

  explicit HolRegSearch(const Holomorph& h) : hol(h), n(h.base()) {
    nAut = h.auts().size();
    const int ord = n.order();
    fpf.assign(size_t(ord) * nAut, 1);
    for (int32_t p = 0; p < nAut; ++p) {
      for (Elem x = 0; x < ord; ++x) {
        Elem a = n.mul(n.inv(x), hol.auts().apply(p, x));
        fpf[size_t(a) * nAut + p] = 0;  // (a, p) fixes x
      }
    }
    feasible.resize(ord);
    for (Elem a = 1; a < ord; ++a) {
      for (int32_t p = 0; p < nAut; ++p) {
        if (!fpf[size_t(a) * nAut + p]) continue;
        if (cyclic_ok(hol.encode(a, p), ord)) feasible[a].push_back(p);
      }
    }
    transSeen.assign(ord, 0);
    transSeen[0] = 1;
    inSet.insert(0);
    members.push_back(0);
  }

  bool admissible(int32_t code) const {
    if (code == 0) return true;
    Elem a = hol.transPart(code);
    return fpf[size_t(a) * nAut + hol.autPart(code)] && !transSeen[a];
  }

  // the cyclic closure of `code` must stay fixed point free with distinct
  // translations and order dividing |N|
  bool cyclic_ok(int32_t code, int ord) const {
    std::vector<uint8_t> seen(ord, 0);
    seen[0] = 1;
    int32_t acc = code;
    int o = 1;
    while (acc != 0) {
      Elem a = hol.transPart(acc);
      if (!fpf[size_t(a) * nAut + hol.autPart(acc)]) return false;
      if (seen[a]) return false;
      seen[a] = 1;
      acc = hol.op(acc, code);
      if (++o > ord) return false;
    }
    return ord % o == 0;
  }

  // Incremental closure of members + {code}; returns the number of added
  // elements, or -1 on failure (rolled back by the caller via undo()).
  int extend(int32_t code, std::vector<int32_t>& added) {
    added.clear();
    auto push = [&](int32_t c) {
      if (inSet.count(c)) return true;
      if (!admissible(c)) return false;
      if (int64_t(members.size()) >= n.order()) return false;
      inSet.insert(c);
      transSeen[hol.transPart(c)] = 1;
      members.push_back(c);
      added.push_back(c);
      return true;
    };
    if (!push(code)) return -1;
    for (size_t i = 0; i < added.size(); ++i) {
      int32_t u = added[i];
      size_t mcount = members.size();
      for (size_t j = 0; j < mcount; ++j) {
        int32_t v = members[j];
        if (!push(hol.op(u, v)) || !push(hol.op(v, u))) return -1;
      }
    }
    if (n.order() % int(members.size()) != 0) return -1;
    return int(added.size());
  }

  void undo(const std::vector<int32_t>& added) {
    for (int32_t c : added) {
      inSet.erase(c);
      transSeen[hol.transPart(c)] = 0;
    }
    members.resize(members.size() - added.size());
  }

  void run() {
    if (int(members.size()) == n.order()) {
      auto s = members;
      std::sort(s.begin(), s.end());
      found.push_back(std::move(s));
      return;
    }
    Elem a = 0;
    while (transSeen[a]) ++a;
    std::vector<int32_t> added;
    for (int32_t p : feasible[a]) {
      if (extend(hol.encode(a, p), added) >= 0) run();
      undo(added);
    }
  }
};

std::mutex g_regMutex;
std::map<std::pair<uint64_t, const Group*>,
         std::shared_ptr<const std::vector<std::vector<int32_t>>>>
    g_regCache;

}  // namespace

const std::vector<std::vector<int32_t>>& regular_subgroups_hol(
    const std::shared_ptr<const Group>& n, int maxN) {
  require(n->order() <= maxN,
          "brute holomorph search bound exceeded for " + n->label());
  std::lock_guard<std::mutex> lock(g_regMutex);
  auto key = std::make_pair(n->tableHash(), n.get());
  auto it = g_regCache.find(key);
  if (it == g_regCache.end()) {
    auto hol = build_holomorph(n);
    HolRegSearch search(*hol);
    search.run();
    std::sort(search.found.begin(), search.found.end());
    it = g_regCache
             .emplace(key,
                      std::make_shared<const std::vector<std::vector<int32_t>>>(
                          std::move(search.found)))
             .first;
  }
  return *it->second;
}

int64_t brute_reg_subgroups_hol(const std::shared_ptr<const Group>& n,
                                const Group& g, int maxN) {
  require(n->order() == g.order(), "oracle needs |G| == |N|");
  const auto& subs = regular_subgroups_hol(n, maxN);
  auto hol = build_holomorph(n);

  // order-multiset fingerprint of G for cheap rejection
  std::vector<int32_t> gOrders(g.order());
  for (Elem x = 0; x < g.order(); ++x) gOrders[x] = g.elemOrder(x);
  std::sort(gOrders.begin(), gOrders.end());
  uint64_t gKey = fnv1a(gOrders.data(), gOrders.size() * 4);

  // per-subgroup fingerprints, cached alongside the subgroup list
  static std::mutex fpMutex;
  static std::map<const void*, std::vector<uint64_t>> fpCache;
  std::vector<uint64_t>* keys;
  {
    std::lock_guard<std::mutex> lock(fpMutex);
    keys = &fpCache[&subs];
  }
  if (keys->empty() && !subs.empty()) {
    std::vector<uint64_t> fresh(subs.size());
    std::vector<int32_t> sOrders(g.order());
    for (size_t s = 0; s < subs.size(); ++s) {
      for (size_t i = 0; i < subs[s].size(); ++i)
        sOrders[i] = hol->carrierOrder(subs[s][i]);
      std::sort(sOrders.begin(), sOrders.end());
      fresh[s] = fnv1a(sOrders.data(), sOrders.size() * 4);
    }
    std::lock_guard<std::mutex> lock(fpMutex);
    if (keys->empty()) *keys = std::move(fresh);
  }

  int64_t count = 0;
  for (size_t s = 0; s < subs.size(); ++s) {
    if ((*keys)[s] != gKey) continue;
    auto sub = hol_subgroup_group(*hol, subs[s], "regsub");
    if (find_isomorphism(*sub, g)) ++count;
  }
  return count;
}

// ---- Perm(G) search --------------------------------------------------------

namespace {

struct PermRegSearch {
  const Group& g;
  int n;
  std::vector<std::array<int8_t, 8>> id_;

  static uint32_t pack(const std::array<int8_t, 8>& p, int n) {
    uint32_t v = 0;
    for (int i = 0; i < n; ++i) v |= uint32_t(p[i]) << (3 * i);
    return v;
  }

  std::vector<std::vector<std::array<int8_t, 8>>> feasible;  // by p(0)
  std::unordered_set<uint32_t> inSet;
  std::vector<std::array<int8_t, 8>> members;
  std::vector<uint8_t> covered;
  int64_t normalizedCount = 0;

  explicit PermRegSearch(const Group& grp) : g(grp), n(grp.order()) {
    // candidates: uniform-cycle-type permutations (free <h>-action)
    std::array<int8_t, 8> p{};
    for (int i = 0; i < n; ++i) p[i] = int8_t(i);
    feasible.resize(n);
    do {
      if (!uniform_cycles(p)) continue;
      feasible[p[0]].push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    covered.assign(n, 0);
    covered[0] = 1;
    std::array<int8_t, 8> id{};
    for (int i = 0; i < n; ++i) id[i] = int8_t(i);
    members.push_back(id);
    inSet.insert(pack(id, n));
  }

  bool uniform_cycles(const std::array<int8_t, 8>& p) const {
    std::array<uint8_t, 8> seen{};
    int cycleLen = -1;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = p[j];
        ++len;
      }
      if (cycleLen < 0)
        cycleLen = len;
      else if (cycleLen != len)
        return false;
    }
    return cycleLen > 1;  // identity excluded
  }

  bool fpf(const std::array<int8_t, 8>& p) const {
    for (int i = 0; i < n; ++i)
      if (p[i] == i) return false;
    return true;
  }

  int extend(const std::array<int8_t, 8>& cand,
             std::vector<std::array<int8_t, 8>>& added) {
    added.clear();
    auto push = [&](const std::array<int8_t, 8>& c) {
      uint32_t key = pack(c, n);
      if (inSet.count(key)) return true;
      if (!fpf(c)) return false;
      if (covered[c[0]]) return false;
      if (int(members.size()) >= n) return false;
      inSet.insert(key);
      covered[c[0]] = 1;
      members.push_back(c);
      added.push_back(c);
      return true;
    };
    auto compose = [&](const std::array<int8_t, 8>& a,
                       const std::array<int8_t, 8>& b) {
      std::array<int8_t, 8> c{};
      for (int i = 0; i < n; ++i) c[i] = a[b[i]];
      return c;
    };
    if (!push(cand)) return -1;
    for (size_t i = 0; i < added.size(); ++i) {
      auto u = added[i];
      size_t mcount = members.size();
      for (size_t j = 0; j < mcount; ++j) {
        auto v = members[j];
        if (!push(compose(u, v)) || !push(compose(v, u))) return -1;
      }
    }
    if (n % int(members.size()) != 0) return -1;
    return int(added.size());
  }

  void undo(const std::vector<std::array<int8_t, 8>>& added) {
    for (auto& c : added) {
      inSet.erase(pack(c, n));
      covered[c[0]] = 0;
    }
    members.resize(members.size() - added.size());
  }

  bool normalized_by_lambda() const {
    // check conjugation by lambda(gen) for each generator of G
    for (Elem gen : g.generators()) {
      std::array<int8_t, 8> lam{}, lamInv{};
      for (int t = 0; t < n; ++t) lam[t] = int8_t(g.mul(gen, t));
      for (int t = 0; t < n; ++t) lamInv[lam[t]] = int8_t(t);
      for (auto& m : members) {
        std::array<int8_t, 8> c{};
        for (int i = 0; i < n; ++i) c[i] = lam[m[lamInv[i]]];
        if (!inSet.count(pack(c, n))) return false;
      }
    }
    return true;
  }

  void run() {
    if (int(members.size()) == n) {
      if (normalized_by_lambda()) ++normalizedCount;
      return;
    }
    int x = 0;
    while (covered[x]) ++x;
    std::vector<std::array<int8_t, 8>> added;
    for (auto& cand : feasible[x]) {
      if (extend(cand, added) >= 0) run();
      undo(added);
    }
  }
};

}  // namespace

int64_t brute_gp_count(const Group& g, bool allowOrder8) {
  require(g.order() <= (allowOrder8 ? 8 : 6),
          "brute_gp_count bound exceeded for " + g.label());
  if (g.order() == 1) return 1;
  PermRegSearch search(g);
  search.run();
  return search.normalizedCount;
}

}  // namespace holocount
