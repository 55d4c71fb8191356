#include "holocount/crossed.hpp"

#include <algorithm>

namespace holocount {

bool check_cocycle(const CrossedHom& c) {
  const Group& g = *c.g;
  const Group& n = *c.n;
  if (int(c.images.size()) != g.order() ||
      int(c.action.size()) != g.order())
    return false;
  if (c.images[0] != 0 || c.action[0] != 0) return false;
  if (!check_homomorphism(c.action, g, *c.auts)) return false;
  for (Elem s1 = 0; s1 < g.order(); ++s1)
    for (Elem s2 = 0; s2 < g.order(); ++s2) {
      int32_t want = n.mul(c.images[s1],
                           c.auts->apply(c.action[s1], c.images[s2]));
      if (c.images[g.mul(s1, s2)] != want) return false;
    }
  return true;
}

std::vector<const int32_t*> action_perms(const AutGroup& a,
                                         const std::vector<int32_t>& idx) {
  std::vector<const int32_t*> out(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) out[i] = a.perm(idx[i]).data();
  return out;
}

void enumerate_cocycles_chain(
    const CocycleSearchConfig& cfg,
    const std::function<bool(const std::vector<int32_t>&)>& emit) {
  const Group& g = *cfg.g;
  const Group& n = *cfg.n;
  const int32_t* const* f = cfg.actionPerms;
  const GenChain& c = *cfg.chain;
  const int levels = c.levels();
  const int gn = g.order();
  const int nn = n.order();
  const bool bijective = cfg.mode == CocycleMode::Bijective;
  if (levels == 0 && cfg.firstRes != 0) return;  // nothing to partition

  std::vector<int32_t> img(gn, -1);
  std::vector<uint8_t> used;
  if (bijective) used.assign(nn, 0);
  img[0] = 0;
  if (bijective) used[0] = 1;
  std::vector<int32_t> byElem(gn);
  bool stop = false;

  auto finish = [&]() {
    if (cfg.mode == CocycleMode::Surjective) {
      std::vector<uint8_t> seen(nn, 0);
      int distinct = 0;
      for (int t = 0; t < gn; ++t)
        if (!seen[img[t]]) {
          seen[img[t]] = 1;
          ++distinct;
        }
      if (distinct != nn) return;
    }
    for (int t = 0; t < gn; ++t) byElem[c.elems[t]] = img[t];
    if (!emit(byElem)) stop = true;
  };

  // g(x * gj) = g(x) * f(x)(g(gj))
  auto edge_value = [&](int xPos, int gj) {
    return n.mul(img[xPos], f[c.elems[xPos]][img[c.genPos[gj]]]);
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
        if (bijective && used[cand]) return;
        img[gp] = cand;
        if (bijective) used[cand] = 1;
      }
      bool ok = true;
      int t = prevSize;
      for (; t < curSize; ++t) {
        if (t == gp) continue;
        int32_t val = edge_value(c.parent[t], c.via[t]);
        if (bijective) {
          if (used[val]) {
            ok = false;
            break;
          }
          used[val] = 1;
        }
        img[t] = val;
      }
      if (ok) {
        for (const auto& e : c.edges[level]) {
          if (edge_value(e.xPos, e.gj) != img[e.xgPos]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) rec(level + 1);
      if (bijective) {
        for (int u = prevSize; u < t; ++u)
          if (u != gp) used[img[u]] = 0;
        if (!forced) used[cand] = 0;
      }
    };

    if (forced) {
      attempt(img[gp]);
    } else {
      for (int32_t cand = 0; cand < nn; ++cand) {
        if (stop) return;
        if (level == 0 && int(cand % cfg.firstMod) != cfg.firstRes) continue;
        attempt(cand);
      }
    }
  };
  rec(0);
}

std::vector<CrossedHom> enumerate_cocycles(const Group& g, const Group& n,
                                           const AutGroup& auts,
                                           const Homomorphism& f,
                                           CocycleMode mode) {
  if (mode == CocycleMode::Bijective)
    require(g.order() == n.order(),
            "bijective cocycles need |G| == |N| (same-order hypothesis)");
  auto fp = action_perms(auts, f.image);
  CocycleSearchConfig cfg;
  cfg.g = &g;
  cfg.n = &n;
  cfg.actionPerms = fp.data();
  const GenChain& chain = default_chain(g);
  cfg.chain = &chain;
  cfg.mode = mode;
  std::vector<CrossedHom> out;
  enumerate_cocycles_chain(cfg, [&](const std::vector<int32_t>& im) {
    out.push_back(CrossedHom{&g, &n, &auts, f.image, im});
    return true;
  });
  return out;
}

std::optional<CrossedHom> extend_cocycle(const Group& g, const Group& n,
                                         const AutGroup& auts,
                                         const Homomorphism& f,
                                         const std::vector<int32_t>& genImages) {
  const GenChain& c = default_chain(g);
  require(genImages.size() == c.gens.size(),
          "extend_cocycle needs one image per generator");
  const int gn = g.order();
  std::vector<int32_t> img(gn, -1);
  img[0] = 0;

  auto fp = action_perms(auts, f.image);
  auto edge_value = [&](int xPos, int gj) {
    return n.mul(img[xPos], fp[c.elems[xPos]][img[c.genPos[gj]]]);
  };

  for (int level = 0; level < c.levels(); ++level) {
    const int prevSize = level == 0 ? 1 : c.levelSize[level - 1];
    const int gp = c.genPos[level];
    if (gp < prevSize) {
      if (img[gp] != genImages[level]) return std::nullopt;
    } else {
      img[gp] = genImages[level];
    }
    for (int t = prevSize; t < c.levelSize[level]; ++t) {
      if (t == gp) continue;
      img[t] = edge_value(c.parent[t], c.via[t]);
    }
    for (const auto& e : c.edges[level])
      if (edge_value(e.xPos, e.gj) != img[e.xgPos]) return std::nullopt;
  }
  std::vector<int32_t> byElem(gn);
  for (int t = 0; t < gn; ++t) byElem[c.elems[t]] = img[t];
  return CrossedHom{&g, &n, &auts, f.image, std::move(byElem)};
}

CrossedHom principal_cocycle(const Group& g, const Group& n,
                             const AutGroup& auts, const Homomorphism& f,
                             Elem eta) {
  std::vector<int32_t> img(g.order());
  Elem etaInv = n.inv(eta);
  for (Elem s = 0; s < g.order(); ++s)
    img[s] = n.mul(etaInv, auts.apply(f.image[s], eta));
  return CrossedHom{&g, &n, &auts, f.image, std::move(img)};
}

Homomorphism beta_embed(const Holomorph& hol, const CrossedHom& c) {
  require(check_cocycle(c), "beta_embed: cocycle check failed");
  std::vector<int32_t> img(c.g->order());
  for (Elem s = 0; s < c.g->order(); ++s)
    img[s] = hol.encode(c.images[s], c.action[s]);
  return Homomorphism{c.g, std::move(img)};
}

std::pair<std::vector<int32_t>, std::vector<int32_t>> canonical_rho_lambda(
    const Holomorph& hol) {
  return {hol.rhoSet(), hol.lambdaSet()};
}

bool is_fpf(const Homomorphism& f, const Homomorphism& g, const Group& n) {
  (void)n;
  require(f.image.size() == g.image.size(), "is_fpf: domain mismatch");
  for (size_t s = 1; s < f.image.size(); ++s)
    if (f.image[s] == g.image[s]) return false;
  return true;
}

bool is_wfpf(const Homomorphism& f, const Homomorphism& g, const Group& q) {
  std::vector<uint8_t> hit(q.order(), 0);
  int distinct = 0;
  for (size_t s = 0; s < f.image.size(); ++s) {
    int32_t v = q.mul(f.image[s], q.inv(g.image[s]));
    if (!hit[v]) {
      hit[v] = 1;
      ++distinct;
    }
  }
  return distinct == q.order();
}

Homomorphism fpf_to_hom(const CrossedHom& c, const Homomorphism& f) {
  const Group& n = *c.n;
  for (Elem s = 0; s < c.g->order(); ++s)
    require(c.action[s] == c.auts->conjIndex(f.image[s]),
            "fpf translation: action is not conj of the given f");
  std::vector<int32_t> img(c.g->order());
  for (Elem s = 0; s < c.g->order(); ++s)
    img[s] = n.mul(c.images[s], f.image[s]);
  return Homomorphism{c.g, std::move(img)};
}

CrossedHom fpf_from_hom(const Homomorphism& g, const Homomorphism& f,
                        const Group& n, const AutGroup& auts) {
  require(g.image.size() == f.image.size(), "fpf translation: size mismatch");
  const Group* dom = g.domain;
  std::vector<int32_t> action(dom->order()), img(dom->order());
  for (Elem s = 0; s < dom->order(); ++s) {
    action[s] = auts.conjIndex(f.image[s]);
    img[s] = n.mul(g.image[s], n.inv(f.image[s]));
  }
  return CrossedHom{dom, &n, &auts, std::move(action), std::move(img)};
}

Homomorphism wfpf_translate(const CrossedHom& c, const Homomorphism& f,
                            const QuotientResult& q) {
  const Group& n = *c.n;
  const Group& quot = *q.group;
  // least lift per coset
  std::vector<Elem> lift(quot.order(), -1);
  for (Elem x = 0; x < n.order(); ++x)
    if (lift[q.proj[x]] < 0) lift[q.proj[x]] = x;
  for (Elem s = 0; s < c.g->order(); ++s)
    require(c.action[s] == c.auts->conjIndex(lift[f.image[s]]),
            "wfpf translation: action is not inner via the given f");
  std::vector<int32_t> img(c.g->order());
  for (Elem s = 0; s < c.g->order(); ++s)
    img[s] = quot.mul(q.proj[c.images[s]], f.image[s]);
  return Homomorphism{c.g, std::move(img)};
}

bool beta_is_rho(const CrossedHom& c) {
  for (auto a : c.action)
    if (a != 0) return false;
  return true;
}

bool beta_is_lambda(const CrossedHom& c, const QuotientResult& centerQuot) {
  const Group& n = *c.n;
  // need an inner action; find the lift of each action value
  std::vector<Elem> lift(c.auts->size(), -1);
  for (Elem eta = 0; eta < n.order(); ++eta) {
    int32_t ci = c.auts->conjIndex(eta);
    if (lift[ci] < 0) lift[ci] = eta;
  }
  for (Elem s = 0; s < c.g->order(); ++s) {
    Elem l = lift[c.action[s]];
    if (l < 0) return false;  // not inner
    // induced g(s) = g(s) * ftilde(s) mod Z(N) must be the identity coset
    if (centerQuot.proj[n.mul(c.images[s], l)] != 0) return false;
  }
  return true;
}

}  // namespace holocount
