#include "holocount/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace holocount {

namespace {

bool aut_stable(const SubgroupHandle& s, const AutGroup& auts) {
  for (int32_t a = 0; a < auts.size(); ++a)
    for (Elem x : s.elems)
      if (!s.contains(auts.apply(a, x))) return false;
  return true;
}

}  // namespace

CharSubgroupList characteristic_subgroups(const Group& n,
                                          const AutGroup& auts) {
  CharSubgroupList out;
  if (n.order() <= Limits::kSubgroupEnumBound) {
    auto subs = subgroups_of_order(n, 0, /*normal_only=*/false);
    for (auto& s : subs)
      if (aut_stable(s, auts)) out.subgroups.push_back(std::move(s));
    out.fullLattice = true;
    return out;
  }
  // canonical family, each candidate verified against Aut
  std::set<std::vector<Elem>> seen;
  auto add = [&](SubgroupHandle s) {
    if (!aut_stable(s, auts)) return;
    if (seen.insert(s.elems).second) out.subgroups.push_back(std::move(s));
  };
  std::vector<Elem> all(n.order());
  for (Elem x = 0; x < n.order(); ++x) all[x] = x;
  add(SubgroupHandle{&n, {0}});
  add(structural_subgroup(n, StructuralKind::Center));
  add(structural_subgroup(n, StructuralKind::Commutator));
  int64_t p = 0;
  if (is_prime_power(n.order(), &p))
    add(structural_subgroup(n, StructuralKind::Frattini, int(p)));
  for (int64_t q = 2; q <= n.order(); ++q)
    if (is_prime(q) && n.order() % q == 0)
      add(structural_subgroup(n, StructuralKind::Power, int(q)));
  add(SubgroupHandle{&n, std::move(all)});
  std::sort(out.subgroups.begin(), out.subgroups.end(),
            [](const SubgroupHandle& a, const SubgroupHandle& b) {
              if (a.elems.size() != b.elems.size())
                return a.elems.size() < b.elems.size();
              return a.elems < b.elems;
            });
  out.fullLattice = false;
  return out;
}

std::optional<SubgroupHandle> maximal_characteristic_subgroup(
    const Group& n, const AutGroup& auts) {
  if (n.order() == 1) return std::nullopt;
  auto list = characteristic_subgroups(n, auts);
  std::optional<SubgroupHandle> best;
  for (auto& s : list.subgroups) {
    if (s.size() == n.order()) continue;
    if (!best || s.size() > best->size() ||
        (s.size() == best->size() && s.elems < best->elems))
      best = s;
  }
  return best;
}

CharSimpleShape char_simple_shape(const Group& q) {
  CharSimpleShape shape;
  require(q.order() > 1, "shape of a trivial quotient");
  if (q.isAbelian()) {
    int64_t p = 0;
    require(is_prime_power(q.order(), &p) , "abelian char-simple must be a p-group");
    for (Elem x = 1; x < q.order(); ++x)
      require(q.elemOrder(x) == int(p),
              "abelian char-simple quotient must have exponent p");
    shape.t_label = "cyclic:" + std::to_string(p);
    shape.t_order = p;
    shape.m = valuation(q.order(), p);
    return shape;
  }
  // non-abelian: T = any minimal normal subgroup, N/M = T^m by order
  auto normals = subgroups_of_order(q, 0, /*normal_only=*/true);
  const SubgroupHandle* minimal = nullptr;
  for (auto& s : normals) {
    if (s.size() == 1 || s.size() == q.order()) continue;
    if (!minimal || s.size() < minimal->size()) minimal = &s;
  }
  if (!minimal) {  // simple group: T = Q, m = 1
    shape.t_label = q.label();
    shape.t_order = q.order();
    shape.m = 1;
    return shape;
  }
  shape.t_order = minimal->size();
  shape.t_label = "order:" + std::to_string(minimal->size());
  int m = 0;
  int64_t acc = 1;
  while (acc < q.order()) {
    acc *= shape.t_order;
    ++m;
  }
  require(acc == q.order(), "quotient is not a power of its minimal normal");
  shape.m = m;
  return shape;
}

ReducedPair reduce_pair(const CrossedHom& c, const SubgroupHandle& m) {
  const Group& g = *c.g;
  const Group& n = *c.n;
  require(m.parent == &n, "M must be a subgroup of N");
  auto q = quotient_group(n, m);
  auto qAuts = automorphism_group(q.group);

  ReducedPair rp;
  rp.quotient = q.group;
  rp.quotientAuts = qAuts;
  rp.proj = q.proj;
  rp.fbar.resize(g.order());
  rp.gbarImages.resize(g.order());

  // pushed-down automorphisms (also verifies M is characteristic)
  std::map<int32_t, int32_t> seen;
  std::vector<int32_t> qperm(q.group->order());
  for (Elem s = 0; s < g.order(); ++s) {
    int32_t a = c.action[s];
    auto it = seen.find(a);
    if (it == seen.end()) {
      auto h = induced_quotient_aut(*c.auts, a, m, q);
      int32_t idx = qAuts->indexOfPerm(
          std::span<const int32_t>(h.image.data(), h.image.size()));
      require(idx >= 0, "pushed-down automorphism not found (bug)");
      it = seen.emplace(a, idx).first;
    }
    rp.fbar[s] = it->second;
    rp.gbarImages[s] = q.proj[c.images[s]];
  }
  std::vector<Elem> ker;
  for (Elem s = 0; s < g.order(); ++s)
    if (rp.gbarImages[s] == 0) ker.push_back(s);
  rp.kernel = SubgroupHandle{&g, std::move(ker)};
  (void)qperm;
  return rp;
}

ModCharChecks verify_mod_char(const ReducedPair& rp, const CrossedHom& c,
                              const SubgroupHandle& m) {
  (void)m;
  const Group& g = *c.g;
  const Group& q = *rp.quotient;
  ModCharChecks checks;

  // (a) ker(gbar) is a subgroup
  checks.kernelIsSubgroup = true;
  for (Elem x : rp.kernel.elems) {
    if (!rp.kernel.contains(g.inv(x))) checks.kernelIsSubgroup = false;
    for (Elem y : rp.kernel.elems)
      if (!rp.kernel.contains(g.mul(x, y))) checks.kernelIsSubgroup = false;
  }

  // (b) gbar(s1) == gbar(s2) iff same left coset of ker(gbar)
  checks.inducedInjective = true;
  for (Elem s1 = 0; s1 < g.order(); ++s1)
    for (Elem s2 = 0; s2 < g.order(); ++s2) {
      bool sameImage = rp.gbarImages[s1] == rp.gbarImages[s2];
      bool sameCoset = rp.kernel.contains(g.mul(g.inv(s1), s2));
      if (sameImage != sameCoset) checks.inducedInjective = false;
    }

  // (c) gbar restricted to ker(fbar) is a homomorphism
  checks.kerFbarHom = true;
  std::vector<Elem> kerF;
  for (Elem s = 0; s < g.order(); ++s)
    if (rp.fbar[s] == 0) kerF.push_back(s);
  for (Elem x : kerF)
    for (Elem y : kerF)
      if (rp.gbarImages[g.mul(x, y)] !=
          q.mul(rp.gbarImages[x], rp.gbarImages[y]))
        checks.kerFbarHom = false;

  // (d) for abelian N/M: gbar of ker(fbar) n Z(G) is fixed by fbar(G)
  checks.abelianFixed = true;
  if (q.isAbelian()) {
    auto zg = structural_subgroup(g, StructuralKind::Center);
    for (Elem s : kerF) {
      if (!zg.contains(s)) continue;
      for (Elem t = 0; t < g.order(); ++t)
        if (rp.quotientAuts->apply(rp.fbar[t], rp.gbarImages[s]) !=
            rp.gbarImages[s])
          checks.abelianFixed = false;
    }
  }
  return checks;
}

// ---- prepared reductions and pruning ---------------------------------------

struct PrunePrecomp {
  std::shared_ptr<const Group> g, n;
  std::shared_ptr<const AutGroup> auts;
  SubgroupHandle m;
  std::shared_ptr<const Group> quotient;
  std::shared_ptr<const AutGroup> quotientAuts;
  std::vector<Elem> proj;
  std::vector<int32_t> autToQuotient;  // Aut(N) index -> Aut(N/M) index
  GenChain quotientChain;              // chain of G reused for gbar search
  bool fastPathCyclicP = false;        // Lemma 4.2/4.3 bounds apply
  std::map<std::vector<int32_t>, bool> memo;  // fbar -> prunable
};

std::shared_ptr<PrunePrecomp> prepare_prune(
    const std::shared_ptr<const Group>& g,
    const std::shared_ptr<const Group>& n,
    const std::shared_ptr<const AutGroup>& auts, const SubgroupHandle& m) {
  auto pre = std::make_shared<PrunePrecomp>();
  pre->g = g;
  pre->n = n;
  pre->auts = auts;
  pre->m = m;
  auto q = quotient_group(*n, m);
  pre->quotient = q.group;
  pre->quotientAuts = automorphism_group(q.group);
  pre->proj = q.proj;

  pre->autToQuotient.assign(auts->size(), -1);
  std::vector<int32_t> qperm(q.group->order());
  for (int32_t a = 0; a < auts->size(); ++a) {
    std::fill(qperm.begin(), qperm.end(), -1);
    bool ok = true;
    for (Elem x = 0; x < n->order() && ok; ++x) {
      int32_t src = q.proj[x], dst = q.proj[auts->apply(a, x)];
      if (qperm[src] < 0)
        qperm[src] = dst;
      else if (qperm[src] != dst)
        ok = false;
    }
    require(ok, "prune setup: M is not characteristic");
    pre->autToQuotient[a] = pre->quotientAuts->indexOfPerm(
        std::span<const int32_t>(qperm.data(), qperm.size()));
    require(pre->autToQuotient[a] >= 0,
            "prune setup: pushed-down automorphism missing");
  }
  pre->quotientChain = build_chain(*g, g->generators());

  // Lemma 4.2/4.3 fast path: G cyclic of odd prime power order, N a
  // non-cyclic p-group, M = Phi(N); then N/M = (Z/p)^m with m >= 2 and
  // [G : ker(gbar)] <= p^(m-1) < p^m, so gbar is never surjective.
  int64_t p = 0;
  if (is_prime_power(g->order(), &p) && p % 2 == 1) {
    bool gCyclic = false;
    for (Elem x = 0; x < g->order(); ++x)
      if (g->elemOrder(x) == g->order()) {
        gCyclic = true;
        break;
      }
    int64_t pn = 0;
    bool nPGroup = is_prime_power(n->order(), &pn) && pn == p;
    bool nCyclic = false;
    for (Elem x = 0; x < n->order(); ++x)
      if (n->elemOrder(x) == n->order()) nCyclic = true;
    if (gCyclic && nPGroup && !nCyclic) {
      auto frat = structural_subgroup(*n, StructuralKind::Frattini, int(p));
      if (frat.elems == m.elems) {
        // quotient must be elementary abelian of rank >= 2
        const Group& quot = *pre->quotient;
        bool elem = quot.isAbelian();
        for (Elem x = 1; x < quot.order() && elem; ++x)
          elem = quot.elemOrder(x) == int(p);
        if (elem && quot.order() >= int64_t(p) * p)
          pre->fastPathCyclicP = true;
      }
    }
  }
  return pre;
}

ReducedPair reduce_pair_prepared(const PrunePrecomp& pre,
                                 const std::vector<int32_t>& action,
                                 const std::vector<int32_t>& images) {
  const Group& g = *pre.g;
  ReducedPair rp;
  rp.quotient = pre.quotient;
  rp.quotientAuts = pre.quotientAuts;
  rp.proj = pre.proj;
  rp.fbar.resize(g.order());
  rp.gbarImages.resize(g.order());
  for (Elem s = 0; s < g.order(); ++s) {
    rp.fbar[s] = pre.autToQuotient[action[s]];
    rp.gbarImages[s] = pre.proj[images[s]];
  }
  std::vector<Elem> ker;
  for (Elem s = 0; s < g.order(); ++s)
    if (rp.gbarImages[s] == 0) ker.push_back(s);
  rp.kernel = SubgroupHandle{&g, std::move(ker)};
  return rp;
}

bool prune_is_unconditional(const PrunePrecomp& pre) {
  return pre.fastPathCyclicP;
}

bool prune_is_usable(const PrunePrecomp& pre) {
  return pre.fastPathCyclicP || pre.m.size() > 1;
}

bool quotient_prune(PrunePrecomp& pre, const std::vector<int32_t>& action) {
  if (pre.fastPathCyclicP) return true;
  // without the index bounds, a trivial M carries no information and the
  // quotient-level enumeration would just repeat the main search
  if (pre.m.size() == 1) return false;

  std::vector<int32_t> fbar(action.size());
  for (size_t i = 0; i < action.size(); ++i)
    fbar[i] = pre.autToQuotient[action[i]];
  auto it = pre.memo.find(fbar);
  if (it != pre.memo.end()) return it->second;

  bool surjectiveFound = false;
  auto fp = action_perms(*pre.quotientAuts, fbar);
  CocycleSearchConfig cfg;
  cfg.g = pre.g.get();
  cfg.n = pre.quotient.get();
  cfg.actionPerms = fp.data();
  cfg.chain = &pre.quotientChain;
  cfg.mode = CocycleMode::Surjective;
  enumerate_cocycles_chain(cfg, [&](const std::vector<int32_t>&) {
    surjectiveFound = true;
    return false;
  });
  bool prunable = !surjectiveFound;
  pre.memo.emplace(std::move(fbar), prunable);
  return prunable;
}

// ---- valuations ------------------------------------------------------------

int valuation(int64_t n, int64_t p) {
  require(is_prime(p), "valuation needs a prime");
  require(n != 0, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int factorial_valuation(int64_t m, int64_t p) {
  require(is_prime(p), "factorial valuation needs a prime");
  int64_t v = 0, q = p;
  while (q <= m) {
    v += m / q;
    if (q > m / p) break;  // avoid overflow
    q *= p;
  }
  return int(v);
}

int64_t gl_order(int m, int64_t p) {
  require(is_prime(p), "gl_order needs a prime");
  require(m >= 1, "gl_order needs m >= 1");
  int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  int64_t out = 1, pi = 1;
  for (int i = 0; i < m; ++i) {
    out *= (pm - pi);
    pi *= p;
  }
  return out;
}

int gl_valuation(int m, int64_t p) {
  return valuation(gl_order(m, p), p);
}

}  // namespace holocount
