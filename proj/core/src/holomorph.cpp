#include "holocount/holomorph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace holocount {

Holomorph::Holomorph(std::shared_ptr<const Group> n,
                     std::shared_ptr<const AutGroup> auts)
    : n_(std::move(n)), auts_(std::move(auts)) {
  require(int64_t(n_->order()) * auts_->size() < (int64_t(1) << 31),
          "holomorph too large to encode in 32 bits");
}

int Holomorph::orderOf(int32_t h) const {
  int32_t acc = h;
  int o = 1;
  while (acc != 0) {
    acc = op(acc, h);
    ++o;
  }
  return o;
}

bool Holomorph::isFixedPointFree(int32_t h) const {
  // act(h,x) == x  <=>  a == x^-1 phi(x); scan for a witness
  int32_t na = auts_->size();
  Elem a = h / na;
  int32_t p = h % na;
  for (Elem x = 0; x < n_->order(); ++x)
    if (n_->mul(n_->inv(x), auts_->apply(p, x)) == a) return false;
  return true;
}

int32_t Holomorph::carrierSize() const {
  int64_t s = size();
  require(s < (int64_t(1) << 31), "holomorph too large as carrier");
  return int32_t(s);
}

int32_t Holomorph::carrierOrder(int32_t a) const {
  if (ordCache_.empty()) ordCache_.assign(size_t(size()), 0);
  int32_t& slot = ordCache_[a];
  if (slot == 0) slot = orderOf(a);
  return slot;
}

std::shared_ptr<const Group> Holomorph::denseGroup() const {
  if (dense_) return dense_;
  require(size() <= Limits::kHolomorphDenseBound,
          "holomorph exceeds the dense-table bound; use the lazy carrier");
  int m = int(size());
  std::vector<Elem> t(size_t(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[size_t(x) * m + y] = op(x, y);
  dense_ = std::make_shared<const Group>(
      Group::fromTable(std::move(t), "Hol(" + n_->label() + ")"));
  return dense_;
}

std::vector<int32_t> Holomorph::rhoSet() const {
  std::vector<int32_t> out;
  for (Elem a = 0; a < n_->order(); ++a) out.push_back(encode(a, 0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int32_t> Holomorph::lambdaSet() const {
  std::vector<int32_t> out;
  for (Elem eta = 0; eta < n_->order(); ++eta)
    out.push_back(encode(n_->inv(eta), auts_->conjIndex(eta)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
std::mutex g_holMutex;
std::map<std::pair<uint64_t, const Group*>, std::shared_ptr<const Holomorph>>
    g_holCache;
}  // namespace

std::shared_ptr<const Holomorph> build_holomorph(
    std::shared_ptr<const Group> n) {
  std::lock_guard<std::mutex> lock(g_holMutex);
  auto key = std::make_pair(n->tableHash(), n.get());
  auto it = g_holCache.find(key);
  if (it == g_holCache.end()) {
    auto auts = automorphism_group(n);
    it = g_holCache
             .emplace(key, std::make_shared<const Holomorph>(n, auts))
             .first;
  }
  return it->second;
}

std::vector<int32_t> hol_closure(const Holomorph& hol,
                                 const std::vector<int32_t>& seed,
                                 int64_t maxSize) {
  if (maxSize == 0) maxSize = hol.size();
  std::unordered_set<int32_t> in;
  std::vector<int32_t> out;
  in.insert(0);
  out.push_back(0);
  std::vector<int32_t> frontier;
  for (int32_t s : seed)
    if (in.insert(s).second) {
      out.push_back(s);
      frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<int32_t> next;
    for (int32_t a : frontier) {
      for (size_t i = 0; i < out.size(); ++i) {
        int32_t b = out[i];
        for (int32_t c : {hol.op(a, b), hol.op(b, a)}) {
          if (in.insert(c).second) {
            require(int64_t(out.size()) < maxSize,
                    "holomorph closure exceeded the requested bound");
            out.push_back(c);
            next.push_back(c);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_regular_subset(const Holomorph& hol, const std::vector<int32_t>& s) {
  // subgroup check
  std::unordered_set<int32_t> in(s.begin(), s.end());
  require(in.count(0) == 1, "regularity test: set misses the identity");
  for (int32_t a : s)
    for (int32_t b : s)
      require(in.count(hol.op(a, b)) == 1,
              "regularity test: set is not closed under the pair law");
  if (int64_t(s.size()) != hol.base().order()) return false;
  // evaluation at 1_N gives a^-1; bijective iff translation parts distinct
  std::vector<uint8_t> seen(hol.base().order(), 0);
  for (int32_t h : s) {
    Elem a = hol.transPart(h);
    if (seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

std::shared_ptr<const Group> hol_subgroup_group(
    const Holomorph& hol, const std::vector<int32_t>& codes,
    const std::string& label) {
  std::vector<int32_t> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  require(!sorted.empty() && sorted[0] == 0,
          "subgroup codes must contain the identity 0");
  const int m = int(sorted.size());
  std::unordered_map<int32_t, int> idx;
  for (int i = 0; i < m; ++i) idx.emplace(sorted[i], i);
  std::vector<Elem> t(size_t(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      auto it = idx.find(hol.op(sorted[x], sorted[y]));
      require(it != idx.end(), "codes are not closed under the pair law");
      t[size_t(x) * m + y] = it->second;
    }
  return std::make_shared<const Group>(
      Group::fromTable(std::move(t), label));
}

}  // namespace holocount
