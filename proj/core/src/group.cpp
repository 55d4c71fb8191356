#include "holocount/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace holocount {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int64_t n, int64_t* p) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      if (n != 1) return false;
      if (p) *p = d;
      return true;
    }
  }
  if (p) *p = n;  // n itself prime
  return true;
}

Elem Group::power(Elem x, int64_t k) const {
  int o = ord_[x];
  k %= o;
  if (k < 0) k += o;
  Elem acc = 0;
  for (int64_t i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

Group Group::fromTable(std::vector<Elem> table, std::string label) {
  Group g;
  size_t n2 = table.size();
  size_t n = 0;
  while (n * n < n2) ++n;
  require(n * n == n2 && n >= 1, "group table is not square: " + label);
  g.n_ = int(n);
  g.mul_ = std::move(table);
  g.label_ = std::move(label);
  g.finalize();
  return g;
}

namespace {

// Closure of `seed` under the table, as a sorted element list.
std::vector<Elem> close_set(const Group& g, std::vector<Elem> work) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out;
  in[0] = 1;
  out.push_back(0);
  std::vector<Elem> frontier;
  for (Elem x : work)
    if (!in[x]) {
      in[x] = 1;
      out.push_back(x);
      frontier.push_back(x);
    }
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier) {
      for (size_t i = 0; i < out.size(); ++i) {
        Elem b = out[i];
        for (Elem c : {g.mul(a, b), g.mul(b, a)}) {
          if (!in[c]) {
            in[c] = 1;
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

}  // namespace

void Group::finalize() {
  const int n = n_;
  for (auto v : mul_)
    if (v < 0 || v >= n) fail("table entry out of range: " + label_);

  // identity at index 0
  for (Elem x = 0; x < n; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      fail("index 0 is not the identity: " + label_);

  // Latin square (rows and columns are permutations)
  {
    std::vector<char> seen(n);
    for (Elem x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem y = 0; y < n; ++y) {
        Elem v = mul(x, y);
        if (seen[v]) fail("row is not a permutation: " + label_);
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem y = 0; y < n; ++y) {
        Elem v = mul(y, x);
        if (seen[v]) fail("column is not a permutation: " + label_);
        seen[v] = 1;
      }
    }
  }

  // inverses
  inv_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mul(x, y) == 0) {
        require(mul(y, x) == 0, "one-sided inverse: " + label_);
        inv_[x] = y;
        break;
      }
    }
    require(inv_[x] >= 0, "missing inverse: " + label_);
  }

  // Greedy generating set: repeatedly add the element of largest order
  // not in the current closure (ties by smallest index). Element orders
  // first, via naive iteration (safe before associativity is known since
  // we only walk the table).
  ord_.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem acc = x;
    int o = 1;
    while (acc != 0) {
      acc = mul(acc, x);
      ++o;
      if (o > n) fail("element order exceeds group order: " + label_);
    }
    ord_[x] = o;
    if (n % o != 0) fail("element order violates Lagrange: " + label_);
  }

  {
    std::vector<char> in(n, 0);
    std::vector<Elem> cl{0};
    in[0] = 1;
    while (int(cl.size()) < n) {
      Elem best = -1;
      for (Elem x = 0; x < n; ++x)
        if (!in[x] && (best == -1 || ord_[x] > ord_[best])) best = x;
      gens_.push_back(best);
      // extend closure
      std::vector<Elem> frontier{best};
      in[best] = 1;
      cl.push_back(best);
      while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem a : frontier)
          for (size_t i = 0; i < cl.size(); ++i) {
            Elem b = cl[i];
            for (Elem c : {mul(a, b), mul(b, a)})
              if (!in[c]) {
                in[c] = 1;
                cl.push_back(c);
                next.push_back(c);
              }
          }
        frontier = std::move(next);
      }
    }
  }

  // Light's associativity test: with a verified generating set it is
  // enough to check (x*g)*y == x*(g*y) for every generator g.
  for (Elem ggen : gens_)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (mul(mul(x, ggen), y) != mul(x, mul(ggen, y)))
          fail("associativity fails: " + label_);
  if (gens_.empty()) {
    // trivial group: nothing to check
  }

  // conjugacy classes
  classId_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (classId_[x] >= 0) continue;
    int id = int(classSize_.size());
    int size = 0;
    for (Elem t = 0; t < n; ++t) {
      Elem c = conjugate(t, x);
      if (classId_[c] < 0) {
        classId_[c] = id;
        ++size;
      }
    }
    classSize_.push_back(size);
  }

  abelian_ = true;
  for (Elem x = 0; x < n && abelian_; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) {
        abelian_ = false;
        break;
      }

  uint64_t h = fnv1a(&n_, sizeof(n_));
  hash_ = fnv1a(mul_.data(), mul_.size() * sizeof(Elem), h);
}

bool SubgroupHandle::contains(Elem x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

bool SubgroupHandle::isNormal() const {
  const Group& g = *parent;
  for (Elem t = 0; t < g.order(); ++t)
    for (Elem x : elems)
      if (!contains(g.conjugate(t, x))) return false;
  return true;
}

SubgroupHandle generated_subgroup(const Group& g,
                                  const std::vector<Elem>& seed) {
  for (Elem x : seed)
    require(x >= 0 && x < g.order(), "seed element out of range");
  return SubgroupHandle{&g, close_set(g, seed)};
}

namespace {

std::vector<SubgroupHandle> all_subgroups(const Group& g) {
  const int n = g.order();
  require(n <= Limits::kSubgroupEnumBound,
          "all-subgroup enumeration bound exceeded for " + g.label());
  // Breadth-first closure over <S, x>; subgroups keyed by 64-bit masks.
  auto mask_of = [](const std::vector<Elem>& v) {
    uint64_t m = 0;
    for (Elem x : v) m |= (uint64_t(1) << x);
    return m;
  };
  std::map<uint64_t, std::vector<Elem>> seen;
  std::vector<uint64_t> queue;
  std::vector<Elem> triv{0};
  seen.emplace(1, triv);
  queue.push_back(1);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<Elem> cur = seen[queue[qi]];
    for (Elem x = 1; x < n; ++x) {
      if (queue[qi] & (uint64_t(1) << x)) continue;
      std::vector<Elem> ext = cur;
      ext.push_back(x);
      auto cl = close_set(g, ext);
      uint64_t m = mask_of(cl);
      if (!seen.count(m)) {
        seen.emplace(m, cl);
        queue.push_back(m);
      }
    }
  }
  std::vector<SubgroupHandle> out;
  out.reserve(seen.size());
  for (auto& [m, v] : seen) out.push_back(SubgroupHandle{&g, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.elems.size() != b.elems.size())
      return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

std::vector<SubgroupHandle> normal_subgroups(const Group& g) {
  const int n = g.order();
  require(n <= Limits::kNormalEnumBound,
          "normal-subgroup enumeration bound exceeded for " + g.label());
  // Normal subgroups are joins of conjugacy classes: grow by adjoining a
  // class and closing (a set generated by full classes is normal).
  std::vector<std::vector<Elem>> classes(g.numClasses());
  for (Elem x = 0; x < n; ++x) classes[g.classOf(x)].push_back(x);

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue;
  std::vector<Elem> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto cur = queue[qi];
    for (auto& cls : classes) {
      if (std::binary_search(cur.begin(), cur.end(), cls[0])) continue;
      std::vector<Elem> ext = cur;
      ext.insert(ext.end(), cls.begin(), cls.end());
      auto cl = close_set(g, ext);
      if (seen.insert(cl).second) queue.push_back(cl);
    }
  }
  std::vector<SubgroupHandle> out;
  for (auto& v : seen) out.push_back(SubgroupHandle{&g, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.elems.size() != b.elems.size())
      return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

}  // namespace

std::vector<SubgroupHandle> subgroups_of_order(const Group& g, int k,
                                               bool normal_only) {
  if (k != 0) require(k >= 1 && g.order() % k == 0, "k must divide |G|");
  auto subs = normal_only ? normal_subgroups(g) : all_subgroups(g);
  if (k == 0) return subs;
  std::vector<SubgroupHandle> out;
  for (auto& s : subs)
    if (s.size() == k) out.push_back(std::move(s));
  return out;
}

SubgroupHandle structural_subgroup(const Group& g, StructuralKind kind,
                                   int p) {
  const int n = g.order();
  switch (kind) {
    case StructuralKind::Center: {
      std::vector<Elem> z;
      for (Elem x = 0; x < n; ++x) {
        bool central = true;
        for (Elem y = 0; y < n && central; ++y)
          central = g.mul(x, y) == g.mul(y, x);
        if (central) z.push_back(x);
      }
      return SubgroupHandle{&g, z};
    }
    case StructuralKind::Commutator: {
      std::vector<Elem> comms;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y) comms.push_back(g.commutator(x, y));
      return generated_subgroup(g, comms);
    }
    case StructuralKind::Power: {
      require(is_prime(p), "power subgroup needs a prime");
      std::vector<Elem> pw;
      for (Elem x = 0; x < n; ++x) pw.push_back(g.power(x, p));
      return generated_subgroup(g, pw);
    }
    case StructuralKind::Frattini: {
      int64_t pr = 0;
      if (n == 1) return SubgroupHandle{&g, {0}};
      if (is_prime_power(n, &pr)) {
        // For p-groups, Phi(G) = G^p [G,G].
        std::vector<Elem> seed;
        for (Elem x = 0; x < n; ++x) seed.push_back(g.power(x, pr));
        for (Elem x = 0; x < n; ++x)
          for (Elem y = x + 1; y < n; ++y) seed.push_back(g.commutator(x, y));
        return generated_subgroup(g, seed);
      }
      require(n <= Limits::kSubgroupEnumBound,
              "Frattini on a non-p-group needs subgroup enumeration; "
              "bound exceeded for " + g.label());
      auto subs = all_subgroups(g);
      // maximal = proper and not contained in any other proper subgroup
      std::vector<const SubgroupHandle*> maximal;
      for (auto& s : subs) {
        if (s.size() == n) continue;
        bool contained = false;
        for (auto& t : subs) {
          if (t.size() == n || t.size() <= s.size()) continue;
          bool sub = std::includes(t.elems.begin(), t.elems.end(),
                                   s.elems.begin(), s.elems.end());
          if (sub) {
            contained = true;
            break;
          }
        }
        if (!contained) maximal.push_back(&s);
      }
      std::vector<Elem> inter;
      for (Elem x = 0; x < n; ++x) {
        bool in_all = true;
        for (auto* m : maximal)
          if (!m->contains(x)) {
            in_all = false;
            break;
          }
        if (in_all) inter.push_back(x);
      }
      if (maximal.empty()) inter.assign(1, 0);  // trivial group
      return SubgroupHandle{&g, inter};
    }
  }
  fail("unreachable structural kind");
}

QuotientResult quotient_group(const Group& g, const SubgroupHandle& m) {
  require(m.parent == &g, "subgroup handle belongs to a different group");
  require(m.isNormal(), "quotient by a non-normal subgroup");
  const int n = g.order();
  const int q = n / m.size();

  std::vector<Elem> cosetRep(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (cosetRep[x] >= 0) continue;
    // left coset x*M; representative = smallest member
    std::vector<Elem> coset;
    for (Elem h : m.elems) coset.push_back(g.mul(x, h));
    Elem rep = *std::min_element(coset.begin(), coset.end());
    for (Elem c : coset) cosetRep[c] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  require(int(reps.size()) == q, "coset bookkeeping failed");

  std::vector<int32_t> idxOfRep(n, -1);
  for (int i = 0; i < q; ++i) idxOfRep[reps[i]] = i;

  std::vector<Elem> table(size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[size_t(i) * q + j] = idxOfRep[cosetRep[g.mul(reps[i], reps[j])]];

  auto qg = std::make_shared<const Group>(Group::fromTable(
      std::move(table), g.label() + "/[" + std::to_string(m.size()) + "]"));
  std::vector<Elem> proj(n);
  for (Elem x = 0; x < n; ++x) proj[x] = idxOfRep[cosetRep[x]];
  return QuotientResult{qg, std::move(proj)};
}

}  // namespace holocount
