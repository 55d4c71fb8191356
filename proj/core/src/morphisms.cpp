#include "holocount/morphisms.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>

namespace holocount {

GenChain build_chain(const Group& g, std::vector<Elem> gens) {
  GenChain c;
  c.g = &g;
  c.gens = std::move(gens);
  const int n = g.order();
  c.posOf.assign(n, -1);
  c.elems.push_back(0);
  c.posOf[0] = 0;
  c.parent.push_back(-1);
  c.via.push_back(-1);
  const int levels = int(c.gens.size());
  c.genPos.assign(levels, -1);
  c.genLevel.assign(levels, -1);
  c.edges.resize(levels);

  for (int i = 0; i < levels; ++i) {
    int before = int(c.elems.size());
    // close under g0..gi, scanning in discovery order
    for (size_t t = 0; t < c.elems.size(); ++t) {
      for (int j = 0; j <= i; ++j) {
        Elem y = g.mul(c.elems[t], c.gens[j]);
        if (c.posOf[y] < 0) {
          c.posOf[y] = int(c.elems.size());
          c.elems.push_back(y);
          c.parent.push_back(int32_t(t));
          c.via.push_back(j);
        }
      }
    }
    c.levelSize.push_back(int(c.elems.size()));
    c.genPos[i] = c.posOf[c.gens[i]];
    c.genLevel[i] = i;
    // verification edges new at this level: x in H_i with (x new or j == i),
    // skipping the spanning-tree edges
    int cur = c.levelSize[i];
    int prev = i == 0 ? 1 : c.levelSize[i - 1];
    for (int t = 0; t < cur; ++t) {
      for (int j = 0; j <= i; ++j) {
        if (t < prev && j < i) continue;  // verified at an earlier level
        Elem y = g.mul(c.elems[t], c.gens[j]);
        int yp = c.posOf[y];
        if (yp >= before && c.parent[yp] == t && c.via[yp] == j &&
            yp >= prev) {
          continue;  // tree edge
        }
        c.edges[i].push_back({t, j, yp});
      }
    }
  }
  if (levels > 0)
    require(c.levelSize.back() == n, "generators do not generate the group");
  else
    require(n == 1, "empty generating set on a nontrivial group");
  return c;
}

namespace {
std::mutex g_chainMutex;
// Keyed by (table hash, address): identical key implies an identical table,
// so a cached chain is valid even across object lifetimes.
std::map<std::pair<uint64_t, const Group*>, std::shared_ptr<const GenChain>>
    g_chainCache;
}  // namespace

const GenChain& default_chain(const Group& g) {
  std::lock_guard<std::mutex> lock(g_chainMutex);
  auto key = std::make_pair(g.tableHash(), &g);
  auto it = g_chainCache.find(key);
  if (it == g_chainCache.end()) {
    it = g_chainCache
             .emplace(key, std::make_shared<const GenChain>(
                               build_chain(g, g.generators())))
             .first;
  }
  return *it->second;
}

std::vector<Homomorphism> enumerate_homs(const Group& g, const Group& h,
                                         HomFilter filter) {
  GroupCarrier hc{&h};
  HomSearchConfig<GroupCarrier> cfg;
  const GenChain& chain = default_chain(g);
  cfg.g = &g;
  cfg.h = &hc;
  cfg.chain = &chain;
  cfg.filter = filter;
  std::vector<Homomorphism> out;
  enumerate_homs_chain<GroupCarrier>(cfg, [&](const std::vector<int32_t>& im) {
    out.push_back(Homomorphism{&g, im});
    return true;
  });
  return out;
}

std::vector<Homomorphism> enumerate_homs_into_aut(const Group& g,
                                                  const AutGroup& a,
                                                  HomFilter filter) {
  HomSearchConfig<AutGroup> cfg;
  const GenChain& chain = default_chain(g);
  cfg.g = &g;
  cfg.h = &a;
  cfg.chain = &chain;
  cfg.filter = filter;
  std::vector<Homomorphism> out;
  enumerate_homs_chain<AutGroup>(cfg, [&](const std::vector<int32_t>& im) {
    out.push_back(Homomorphism{&g, im});
    return true;
  });
  return out;
}

const std::vector<int32_t>& ActionHomView::indices() const {
  if (!idxValid_) {
    idx_.resize(perms->size());
    for (size_t x = 0; x < perms->size(); ++x) {
      idx_[x] = auts->indexOfPerm(std::span<const int32_t>(
          (*perms)[x], size_t(auts->base().order())));
      require(idx_[x] >= 0, "action image index lookup failed (bug)");
    }
    idxValid_ = true;
  }
  return idx_;
}

void for_each_action_hom(
    const Group& g, const AutGroup& a, const GenChain& c, int firstMod,
    int firstRes, const std::function<bool(const ActionHomView&)>& fn) {
  const int levels = c.levels();
  const int gn = g.order();
  const int n = a.base().order();
  if (levels == 0 && firstRes != 0) return;  // nothing to partition

  std::vector<std::vector<int32_t>> cands(levels);
  for (int i = 0; i < levels; ++i) {
    int og = g.elemOrder(c.gens[i]);
    for (int32_t v = 0; v < a.size(); ++v)
      if (og % a.orderOf(v) == 0) cands[i].push_back(v);
  }

  // per-position permutation storage: generator positions point into the
  // AutGroup's own rows, tree nodes into composed buffers
  std::vector<int32_t> buf(size_t(gn) * n);
  std::vector<const int32_t*> ptr(gn, nullptr);
  ptr[0] = a.perm(0).data();

  std::vector<const int32_t*> byElem(gn);
  ActionHomView view;
  view.auts = &a;
  view.perms = &byElem;
  bool stop = false;

  auto verify_edges = [&](int level) {
    for (const auto& e : c.edges[level]) {
      const int32_t* px = ptr[e.xPos];
      const int32_t* pj = ptr[c.genPos[e.gj]];
      const int32_t* pxy = ptr[e.xgPos];
      for (int i = 0; i < n; ++i)
        if (px[pj[i]] != pxy[i]) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int level) {
    if (stop) return;
    if (level == levels) {
      for (int t = 0; t < gn; ++t) byElem[c.elems[t]] = ptr[t];
      view.idxValid_ = false;
      if (!fn(view)) stop = true;
      return;
    }
    const int prevSize = level == 0 ? 1 : c.levelSize[level - 1];
    const int curSize = c.levelSize[level];
    const int gp = c.genPos[level];
    const bool forced = gp < prevSize;

    auto attempt = [&]() {
      for (int t = prevSize; t < curSize; ++t) {
        if (t == gp) continue;
        const int32_t* pp = ptr[c.parent[t]];
        const int32_t* pg = ptr[c.genPos[c.via[t]]];
        int32_t* dst = buf.data() + size_t(t) * n;
        for (int i = 0; i < n; ++i) dst[i] = pp[pg[i]];
        ptr[t] = dst;
      }
      if (verify_edges(level)) rec(level + 1);
    };

    if (forced) {
      attempt();
    } else {
      const auto& list = cands[level];
      for (size_t ci = 0; ci < list.size(); ++ci) {
        if (stop) return;
        if (level == 0 && int(ci % firstMod) != firstRes) continue;
        ptr[gp] = a.perm(list[ci]).data();
        attempt();
      }
    }
  };
  rec(0);
}

// ---- AutGroup -------------------------------------------------------------

uint64_t AutGroup::permKey(std::span<const int32_t> p) const {
  if (n_ <= 16) {
    uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= uint64_t(p[i]) << (4 * i);
    return k;
  }
  return fnv1a(p.data(), size_t(n_) * sizeof(int32_t), salt_);
}

void AutGroup::buildIndex() {
  for (int attempt = 0; attempt < 64; ++attempt) {
    index_.clear();
    index_.reserve(size_t(nAut_) * 2);
    bool ok = true;
    for (int32_t i = 0; i < nAut_ && ok; ++i)
      ok = index_.emplace(permKey(perm(i)), i).second;
    if (ok) return;
    salt_ = hash_mix(salt_ + attempt + 1);  // collision: pick a new salt
  }
  fail("could not build a collision-free automorphism index");
}

int32_t AutGroup::indexOfPerm(std::span<const int32_t> p) const {
  auto it = index_.find(permKey(p));
  if (it == index_.end()) return -1;
  int32_t i = it->second;
  if (!std::equal(p.begin(), p.end(), perm(i).begin())) return -1;
  return i;
}

int32_t AutGroup::compose(int32_t a, int32_t b) const {
  if (!composeTable_.empty()) return composeTable_[size_t(a) * nAut_ + b];
  thread_local std::vector<int32_t> scratch;
  scratch.resize(n_);
  const int32_t* pa = perms_.data() + size_t(a) * n_;
  const int32_t* pb = perms_.data() + size_t(b) * n_;
  for (int i = 0; i < n_; ++i) scratch[i] = pa[pb[i]];
  int32_t idx = indexOfPerm(scratch);
  require(idx >= 0, "automorphism composition left the group (bug)");
  return idx;
}

namespace {

int perm_order(std::span<const int32_t> p) {
  int n = int(p.size());
  std::vector<char> seen(n, 0);
  int64_t ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, int64_t(len));
  }
  return int(ord);
}

const char kAutCacheMagic[4] = {'H', 'C', 'A', '1'};

std::filesystem::path aut_cache_path(uint64_t hash) {
  const char* dir = std::getenv("HOLOCOUNT_CACHE_DIR");
  if (!dir || !*dir) return {};
  char name[32];
  std::snprintf(name, sizeof(name), "aut_%016llx.bin",
                static_cast<unsigned long long>(hash));
  return std::filesystem::path(dir) / name;
}

bool load_aut_cache(const Group& g, std::vector<int32_t>* perms) {
  auto path = aut_cache_path(g.tableHash());
  if (path.empty()) return false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[4];
  uint64_t hash = 0;
  int32_t n = 0, nAut = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&hash), sizeof(hash));
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&nAut), sizeof(nAut));
  if (!in || std::memcmp(magic, kAutCacheMagic, 4) != 0 ||
      hash != g.tableHash() || n != g.order() || nAut < 1)
    return false;
  perms->assign(size_t(n) * nAut, -1);
  in.read(reinterpret_cast<char*>(perms->data()),
          std::streamsize(perms->size() * sizeof(int32_t)));
  if (!in) return false;
  // sanity: every cached row must be an automorphism
  for (int32_t a = 0; a < nAut; ++a) {
    const int32_t* p = perms->data() + size_t(a) * n;
    std::vector<char> seen(n, 0);
    if (p[0] != 0) return false;
    for (int i = 0; i < n; ++i) {
      if (p[i] < 0 || p[i] >= n || seen[p[i]]) return false;
      seen[p[i]] = 1;
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (p[g.mul(x, y)] != g.mul(p[x], p[y])) return false;
  }
  return true;
}

void save_aut_cache(const Group& g, const std::vector<int32_t>& perms,
                    int32_t nAut) {
  auto path = aut_cache_path(g.tableHash());
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return;
  uint64_t hash = g.tableHash();
  int32_t n = g.order();
  out.write(kAutCacheMagic, 4);
  out.write(reinterpret_cast<const char*>(&hash), sizeof(hash));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&nAut), sizeof(nAut));
  out.write(reinterpret_cast<const char*>(perms.data()),
            std::streamsize(perms.size() * sizeof(int32_t)));
}

std::mutex g_autMutex;
std::map<uint64_t, std::shared_ptr<const AutGroup>> g_autCache;

}  // namespace

std::shared_ptr<const AutGroup> automorphism_group(
    const std::shared_ptr<const Group>& n) {
  {
    std::lock_guard<std::mutex> lock(g_autMutex);
    auto it = g_autCache.find(n->tableHash());
    if (it != g_autCache.end()) return it->second;
  }

  const Group& g = *n;
  const int ord = g.order();
  std::vector<int32_t> perms;

  if (!load_aut_cache(g, &perms)) {
    // backtracking on generator images with fingerprint pruning
    const GenChain& chain = default_chain(g);
    std::vector<std::vector<int32_t>> cands(chain.levels());
    for (int i = 0; i < chain.levels(); ++i) {
      uint64_t fp = g.fingerprint(chain.gens[i]);
      for (Elem x = 0; x < ord; ++x)
        if (g.fingerprint(x) == fp) cands[i].push_back(x);
    }
    GroupCarrier hc{&g};
    HomSearchConfig<GroupCarrier> cfg;
    cfg.g = &g;
    cfg.h = &hc;
    cfg.chain = &chain;
    cfg.filter = HomFilter::Injective;
    cfg.candsOverride = &cands;
    std::vector<std::vector<int32_t>> found;
    enumerate_homs_chain<GroupCarrier>(cfg,
                                       [&](const std::vector<int32_t>& im) {
                                         found.push_back(im);
                                         return true;
                                       });
    std::sort(found.begin(), found.end());
    perms.reserve(found.size() * size_t(ord));
    for (auto& p : found) perms.insert(perms.end(), p.begin(), p.end());
    save_aut_cache(g, perms, int32_t(found.size()));
  }

  auto ag = std::shared_ptr<AutGroup>(new AutGroup());
  ag->base_ = n;
  ag->n_ = ord;
  ag->nAut_ = int32_t(perms.size() / size_t(ord));
  ag->perms_ = std::move(perms);
  require(ag->nAut_ >= 1, "automorphism enumeration found nothing");
  // identity must be at index 0 after the lexicographic sort
  for (int i = 0; i < ord; ++i)
    require(ag->perm(0)[i] == i, "identity automorphism not at index 0");

  ag->buildIndex();
  ag->ord_.resize(ag->nAut_);
  ag->inv_.resize(ag->nAut_);
  std::vector<int32_t> scratch(ord);
  for (int32_t a = 0; a < ag->nAut_; ++a) {
    ag->ord_[a] = perm_order(ag->perm(a));
    auto p = ag->perm(a);
    for (int i = 0; i < ord; ++i) scratch[p[i]] = i;
    ag->inv_[a] = ag->indexOfPerm(scratch);
    require(ag->inv_[a] >= 0, "automorphism inverse missing (bug)");
  }

  // compose table when affordable
  if (int64_t(ag->nAut_) * ag->nAut_ <= int64_t(4) << 20 &&
      int64_t(ag->nAut_) * ag->nAut_ * ord <= int64_t(2e8)) {
    ag->composeTable_.resize(size_t(ag->nAut_) * ag->nAut_);
    for (int32_t a = 0; a < ag->nAut_; ++a) {
      auto pa = ag->perm(a);
      for (int32_t b = 0; b < ag->nAut_; ++b) {
        auto pb = ag->perm(b);
        for (int i = 0; i < ord; ++i) scratch[i] = pa[pb[i]];
        int32_t idx = ag->indexOfPerm(scratch);
        require(idx >= 0, "automorphisms not closed under composition");
        ag->composeTable_[size_t(a) * ag->nAut_ + b] = idx;
      }
    }
  }

  // conj(eta) = (x -> eta x eta^-1) and the inner subgroup
  ag->conjIdx_.resize(ord);
  for (Elem eta = 0; eta < ord; ++eta) {
    for (Elem x = 0; x < ord; ++x) scratch[x] = g.conjugate(eta, x);
    ag->conjIdx_[eta] = ag->indexOfPerm(scratch);
    require(ag->conjIdx_[eta] >= 0, "inner automorphism missing (bug)");
  }
  ag->innIdx_ = ag->conjIdx_;
  std::sort(ag->innIdx_.begin(), ag->innIdx_.end());
  ag->innIdx_.erase(std::unique(ag->innIdx_.begin(), ag->innIdx_.end()),
                    ag->innIdx_.end());
  auto center = structural_subgroup(g, StructuralKind::Center);
  require(int(ag->innIdx_.size()) == ord / center.size(),
          "|Inn| != |G|/|Z| (bug)");

  std::lock_guard<std::mutex> lock(g_autMutex);
  auto [it, fresh] = g_autCache.emplace(n->tableHash(),
                                        std::shared_ptr<const AutGroup>(ag));
  return it->second;
}

Homomorphism induced_quotient_aut(const AutGroup& aut, int32_t phi,
                                  const SubgroupHandle& m,
                                  const QuotientResult& q) {
  const Group& n = aut.base();
  // M must be characteristic: every automorphism maps it onto itself
  for (int32_t a = 0; a < aut.size(); ++a)
    for (Elem x : m.elems)
      require(m.contains(aut.apply(a, x)), "M is not characteristic");
  const int qn = q.group->order();
  std::vector<int32_t> img(qn, -1);
  for (Elem x = 0; x < n.order(); ++x) {
    int32_t src = q.proj[x];
    int32_t dst = q.proj[aut.apply(phi, x)];
    if (img[src] < 0)
      img[src] = dst;
    else
      require(img[src] == dst, "induced map not well-defined (bug)");
  }
  return Homomorphism{q.group.get(), std::move(img)};
}

// ---- isomorphism testing ---------------------------------------------------

std::optional<GroupIso> find_isomorphism(const Group& g, const Group& h) {
  if (g.order() != h.order()) return std::nullopt;
  const int n = g.order();
  // order-profile fast reject
  {
    std::vector<uint64_t> fg(n), fh(n);
    for (Elem x = 0; x < n; ++x) {
      fg[x] = g.fingerprint(x);
      fh[x] = h.fingerprint(x);
    }
    std::sort(fg.begin(), fg.end());
    std::sort(fh.begin(), fh.end());
    if (fg != fh) return std::nullopt;
  }
  const GenChain& chain = default_chain(g);
  std::vector<std::vector<int32_t>> cands(chain.levels());
  for (int i = 0; i < chain.levels(); ++i) {
    uint64_t fp = g.fingerprint(chain.gens[i]);
    for (Elem x = 0; x < n; ++x)
      if (h.fingerprint(x) == fp) cands[i].push_back(x);
  }
  GroupCarrier hc{&h};
  HomSearchConfig<GroupCarrier> cfg;
  cfg.g = &g;
  cfg.h = &hc;
  cfg.chain = &chain;
  cfg.filter = HomFilter::Injective;
  cfg.candsOverride = &cands;
  std::optional<GroupIso> out;
  enumerate_homs_chain<GroupCarrier>(cfg, [&](const std::vector<int32_t>& im) {
    out = GroupIso{&g, &h, im};
    return false;  // first witness only
  });
  return out;
}

}  // namespace holocount
