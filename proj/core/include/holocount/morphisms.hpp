#ifndef HOLOCOUNT_MORPHISMS_HPP_
#define HOLOCOUNT_MORPHISMS_HPP_

#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "holocount/group.hpp"

namespace holocount {

// BFS spanning structure of the Cayley graph of G restricted to the chain
// of subgroups <g0>, <g0,g1>, ... Used by every backtracking search: a map
// assigned on generators is propagated along the tree and verified on the
// remaining generator edges, level by level.
struct GenChain {
  const Group* g = nullptr;
  std::vector<Elem> gens;
  std::vector<Elem> elems;        // chain discovery order, elems[0] = 0
  std::vector<int32_t> posOf;     // element id -> position
  std::vector<int32_t> parent;    // tree: elems[t] = elems[parent[t]] * gens[via[t]]
  std::vector<int32_t> via;
  std::vector<int32_t> levelSize; // |<g0..gi>| per level
  std::vector<int32_t> genPos;    // chain position of gens[i]
  std::vector<int32_t> genLevel;  // level at which gens[i] first appears

  struct Edge {
    int32_t xPos;
    int32_t gj;     // generator index
    int32_t xgPos;  // position of elems[xPos] * gens[gj]
  };
  std::vector<std::vector<Edge>> edges;  // verification edges per level

  int levels() const { return int(gens.size()); }
};

GenChain build_chain(const Group& g, std::vector<Elem> gens);
const GenChain& default_chain(const Group& g);  // cached, greedy generators

enum class HomFilter { All, Injective, Surjective };

// Codomain carrier interface, satisfied by Group (below), AutGroup and
// Holomorph: carrierSize/carrierOp/carrierInv/carrierOrder with identity 0.
struct GroupCarrier {
  const Group* g;
  int32_t carrierSize() const { return g->order(); }
  int32_t carrierOp(int32_t a, int32_t b) const { return g->mul(a, b); }
  int32_t carrierInv(int32_t a) const { return g->inv(a); }
  int32_t carrierOrder(int32_t a) const { return g->elemOrder(a); }
};

// A homomorphism stored as its full image array (codomain indices by
// domain element id).
struct Homomorphism {
  const Group* domain = nullptr;
  std::vector<int32_t> image;

  int32_t operator()(Elem x) const { return image[x]; }
  bool isTrivial() const {
    for (auto v : image)
      if (v != 0) return false;
    return true;
  }
};

// Automorphism group of a base group, elements sorted lexicographically as
// permutations (so index 0 is the identity). Composition law:
// (i o j)(x) = perm_i[perm_j[x]].
class AutGroup {
 public:
  const Group& base() const { return *base_; }
  int32_t size() const { return nAut_; }
  int32_t apply(int32_t a, Elem x) const {
    return perms_[size_t(a) * n_ + x];
  }
  std::span<const int32_t> perm(int32_t a) const {
    return {perms_.data() + size_t(a) * n_, size_t(n_)};
  }
  int32_t compose(int32_t a, int32_t b) const;  // index of perm_a o perm_b
  int32_t inverseOf(int32_t a) const { return inv_[a]; }
  int32_t orderOf(int32_t a) const { return ord_[a]; }
  int32_t indexOfPerm(std::span<const int32_t> perm) const;  // -1 if absent

  int32_t conjIndex(Elem eta) const { return conjIdx_[eta]; }
  const std::vector<int32_t>& innIndices() const { return innIdx_; }

  // carrier interface
  int32_t carrierSize() const { return nAut_; }
  int32_t carrierOp(int32_t a, int32_t b) const { return compose(a, b); }
  int32_t carrierInv(int32_t a) const { return inv_[a]; }
  int32_t carrierOrder(int32_t a) const { return ord_[a]; }

  friend std::shared_ptr<const AutGroup> automorphism_group(
      const std::shared_ptr<const Group>& n);

 private:
  std::shared_ptr<const Group> base_;
  int32_t n_ = 0;     // |base|
  int32_t nAut_ = 0;  // #automorphisms
  std::vector<int32_t> perms_;  // nAut x n, lex-sorted
  std::vector<int32_t> ord_, inv_;
  std::vector<int32_t> composeTable_;  // optional
  std::unordered_map<uint64_t, int32_t> index_;  // perm hash -> index
  uint64_t salt_ = 0xcbf29ce484222325ull;
  std::vector<int32_t> conjIdx_;
  std::vector<int32_t> innIdx_;
  uint64_t permKey(std::span<const int32_t> p) const;
  void buildIndex();
};

// Brute-force automorphism group by generator-image backtracking with
// (order, class size) pruning. Cached in-process by table hash, and on
// disk under $HOLOCOUNT_CACHE_DIR when that is set.
std::shared_ptr<const AutGroup> automorphism_group(
    const std::shared_ptr<const Group>& n);

// Full multiplicativity check; the test oracle for the enumerators.
template <class K>
bool check_homomorphism(const std::vector<int32_t>& image, const Group& g,
                        const K& h) {
  if (int(image.size()) != g.order()) return false;
  if (image[0] != 0) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (image[g.mul(x, y)] != h.carrierOp(image[x], image[y]))
        return false;
  return true;
}

// Complete duplicate-free enumeration of Hom(G, K) in lexicographic
// generator-image order. `emit` gets the image array by element id and may
// return false to stop the stream. Level-0 work can be partitioned across
// workers via (firstMod, firstRes): only first-generator candidates with
// index % firstMod == firstRes are explored.
template <class K>
struct HomSearchConfig {
  const Group* g = nullptr;
  const K* h = nullptr;
  const GenChain* chain = nullptr;
  HomFilter filter = HomFilter::All;
  int firstMod = 1;
  int firstRes = 0;
  // Optional per-level candidate lists (ascending); default is the
  // order-divisibility filter.
  const std::vector<std::vector<int32_t>>* candsOverride = nullptr;
};

template <class K>
void enumerate_homs_chain(
    const HomSearchConfig<K>& cfg,
    const std::function<bool(const std::vector<int32_t>&)>& emit) {
  const Group& g = *cfg.g;
  const K& h = *cfg.h;
  const GenChain& c = *cfg.chain;
  const int levels = c.levels();
  const int n = g.order();
  const int32_t hsize = h.carrierSize();
  const bool injective = cfg.filter == HomFilter::Injective;

  if (injective) {
    // image of <g0..gi> is a subgroup of the same size
    for (int i = 0; i < levels; ++i)
      if (c.levelSize[i] > hsize || hsize % c.levelSize[i] != 0) return;
  }
  // a trivial domain has no level-0 candidates to partition
  if (levels == 0 && cfg.firstRes != 0) return;

  std::vector<std::vector<int32_t>> cands;
  const std::vector<std::vector<int32_t>>* candsp = cfg.candsOverride;
  if (!candsp) {
    cands.resize(levels);
    for (int i = 0; i < levels; ++i) {
      int og = g.elemOrder(c.gens[i]);
      for (int32_t v = 0; v < hsize; ++v) {
        int ov = h.carrierOrder(v);
        if (injective ? ov == og : og % ov == 0) cands[i].push_back(v);
      }
    }
    candsp = &cands;
  }

  std::vector<int32_t> img(n, -1);
  std::vector<uint8_t> used;
  if (injective) used.assign(hsize, 0);
  img[0] = 0;
  if (injective) used[0] = 1;
  std::vector<int32_t> byElem(n);
  bool stop = false;

  auto finish = [&]() {
    if (cfg.filter == HomFilter::Surjective) {
      std::vector<uint8_t> seen(hsize, 0);
      int32_t distinct = 0;
      for (int t = 0; t < n; ++t)
        if (!seen[img[t]]) {
          seen[img[t]] = 1;
          ++distinct;
        }
      if (distinct != hsize) return;
    }
    for (int t = 0; t < n; ++t) byElem[c.elems[t]] = img[t];
    if (!emit(byElem)) stop = true;
  };

  auto verify_edges = [&](int level) {
    for (const auto& e : c.edges[level]) {
      if (h.carrierOp(img[e.xPos], img[c.genPos[e.gj]]) != img[e.xgPos])
        return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int level) {
    if (stop) return;
    if (level == levels) {
      finish();
      return;
    }
    const int prevSize = level == 0 ? 1 : c.levelSize[level - 1];
    const int curSize = c.levelSize[level];
    const int gp = c.genPos[level];
    const bool forced = gp < prevSize;

    auto attempt = [&](int32_t cand) {
      if (!forced) {
        if (injective && used[cand]) return;
        img[gp] = cand;
        if (injective) used[cand] = 1;
      }
      // propagate the new tree nodes of this level
      bool ok = true;
      int t = prevSize;
      for (; t < curSize; ++t) {
        if (t == gp) continue;
        int32_t val =
            h.carrierOp(img[c.parent[t]], img[c.genPos[c.via[t]]]);
        if (injective) {
          if (used[val]) {
            ok = false;
            break;
          }
          used[val] = 1;
        }
        img[t] = val;
      }
      if (ok && verify_edges(level)) rec(level + 1);
      if (injective) {
        for (int u = prevSize; u < t; ++u)
          if (u != gp) used[img[u]] = 0;
        if (!forced) used[cand] = 0;
      }
    };

    if (forced) {
      attempt(img[gp]);
    } else {
      const auto& list = (*candsp)[level];
      for (size_t ci = 0; ci < list.size(); ++ci) {
        if (stop) return;
        if (level == 0 && int(ci % cfg.firstMod) != cfg.firstRes) continue;
        attempt(list[ci]);
      }
    }
  };
  rec(0);
}

// Convenience: collect Hom(G, K) with the default chain.
std::vector<Homomorphism> enumerate_homs(const Group& g, const Group& h,
                                         HomFilter filter);
std::vector<Homomorphism> enumerate_homs_into_aut(const Group& g,
                                                  const AutGroup& a,
                                                  HomFilter filter);

// Zero-lookup view of one action homomorphism f: G -> Aut(N) during
// enumeration: the per-element permutations are always available; global
// automorphism indices are resolved lazily (and cached) on request.
struct ActionHomView {
  const AutGroup* auts = nullptr;
  const std::vector<const int32_t*>* perms = nullptr;  // by G element id
  const std::vector<int32_t>& indices() const;

 private:
  friend void for_each_action_hom(
      const Group&, const AutGroup&, const GenChain&, int, int,
      const std::function<bool(const ActionHomView&)>&);
  mutable std::vector<int32_t> idx_;
  mutable bool idxValid_ = false;
};

// Complete duplicate-free enumeration of Hom(G, Aut(N)) in lexicographic
// generator-image order, avoiding composition-index lookups in the hot
// path (the images are tracked as raw permutation buffers). Level-0
// candidates are partitioned by (firstMod, firstRes) as in the generic
// engine.
void for_each_action_hom(
    const Group& g, const AutGroup& a, const GenChain& c, int firstMod,
    int firstRes, const std::function<bool(const ActionHomView&)>& fn);

// phi-bar on N/M for a single automorphism; requires phi(M) = M (checked).
// `q` must be the quotient of aut.base() by m.
Homomorphism induced_quotient_aut(const AutGroup& aut, int32_t phi,
                                  const SubgroupHandle& m,
                                  const QuotientResult& q);

}  // namespace holocount

#endif  // HOLOCOUNT_MORPHISMS_HPP_
