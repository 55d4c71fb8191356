#include "holocount/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <map>
#include <sstream>

namespace holocount {

namespace {

Group table_group(int n, std::string label,
                  const std::function<int(int, int)>& op) {
  std::vector<Elem> t(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[size_t(x) * n + y] = op(x, y);
  return Group::fromTable(std::move(t), std::move(label));
}

Group cyclic(int n, const std::string& label) {
  require(n >= 1, "cyclic order must be positive");
  return table_group(n, label, [n](int x, int y) { return (x + y) % n; });
}

Group abelian(const std::vector<int>& ds, const std::string& label) {
  int n = 1;
  for (int d : ds) {
    require(d >= 1, "abelian factor must be positive");
    n *= d;
  }
  return table_group(n, label, [&ds](int x, int y) {
    int out = 0, scale = 1;
    for (int d : ds) {
      out += (((x % d) + (y % d)) % d) * scale;
      scale *= d;
      x /= d;
      y /= d;
    }
    return out;
  });
}

// C_n x| C_m with the generator of C_m acting as a -> a^t, t^m = 1 mod n.
// Elements are (i, j) = a^i b^j, index i + n*j.
Group semidirect_cyclic(int n, int m, int64_t t, const std::string& label) {
  std::vector<int64_t> tpow(m);
  tpow[0] = 1;
  for (int j = 1; j < m; ++j) tpow[j] = (tpow[j - 1] * t) % n;
  require((tpow[m - 1] * t) % n == 1 % n, "action order does not divide m");
  return table_group(n * m, label, [=](int x, int y) {
    int i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
    int i = int((i1 + i2 * tpow[j1]) % n);
    int j = (j1 + j2) % m;
    return i + n * j;
  });
}

// Dicyclic of order 4k: <a,b | a^(2k)=1, b^2=a^k, b a b^-1 = a^-1>.
// Elements a^i b^j with i < 2k, j < 2, index i + 2k*j.
Group dicyclic(int k, const std::string& label) {
  require(k >= 1, "dicyclic parameter must be >= 1");
  int n = 2 * k;
  return table_group(4 * k, label, [=](int x, int y) {
    int i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
    int i, j;
    if (j1 == 0) {
      i = (i1 + i2) % n;
      j = j2;
    } else {
      i = ((i1 - i2) % n + n) % n;
      if (j2 == 1) i = (i + k) % n;
      j = 1 - j2;
    }
    return i + n * j;
  });
}

// Heisenberg group of order p^3, exponent p (p odd):
// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
Group heisenberg(int p, const std::string& label) {
  require(is_prime(p) && p % 2 == 1, "heis:p needs an odd prime");
  int n = p * p * p;
  return table_group(n, label, [=](int x, int y) {
    int a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
    int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    int a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
    return a * p * p + b * p + c;
  });
}

Group direct_product(const Group& a, const Group& b, const std::string& label) {
  int na = a.order(), nb = b.order();
  return table_group(na * nb, label, [&](int x, int y) {
    int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
    return a.mul(xa, ya) * nb + b.mul(xb, yb);
  });
}

// Central product (A x B) / <(zA, zB)> where zA, zB are the least central
// involutions of the factors.
Group central_product(const Group& a, const Group& b,
                      const std::string& label) {
  auto za = structural_subgroup(a, StructuralKind::Center);
  auto zb = structural_subgroup(b, StructuralKind::Center);
  Elem ia = -1, ib = -1;
  for (Elem x : za.elems)
    if (a.elemOrder(x) == 2) {
      ia = x;
      break;
    }
  for (Elem x : zb.elems)
    if (b.elemOrder(x) == 2) {
      ib = x;
      break;
    }
  require(ia >= 0 && ib >= 0,
          "centralprod factors need central involutions: " + label);
  Group prod = direct_product(a, b, label + ".amb");
  Elem z = ia * b.order() + ib;
  auto m = generated_subgroup(prod, {z});
  auto q = quotient_group(prod, m);
  std::vector<Elem> t(size_t(q.group->order()) * q.group->order());
  for (int x = 0; x < q.group->order(); ++x)
    for (int y = 0; y < q.group->order(); ++y)
      t[size_t(x) * q.group->order() + y] = q.group->mul(x, y);
  return Group::fromTable(std::move(t), label);
}

// ---- permutation groups -------------------------------------------------

uint32_t pack_perm(const std::array<int8_t, 8>& p, int n) {
  uint32_t v = 0;
  for (int i = 0; i < n; ++i) v |= uint32_t(p[i]) << (3 * i);
  return v;
}

bool perm_even(const std::array<int8_t, 8>& p, int n) {
  int sw = 0;
  std::array<int8_t, 8> q = p;
  for (int i = 0; i < n; ++i)
    while (q[i] != i) {
      std::swap(q[i], q[q[i]]);
      ++sw;
    }
  return sw % 2 == 0;
}

Group perm_group(int n, bool evenOnly, const std::string& label,
                 int maxOrder) {
  require(n >= 1 && n <= 8, "sym/alt support n <= 8");
  std::array<int8_t, 8> p{};
  for (int i = 0; i < n; ++i) p[i] = int8_t(i);
  std::vector<std::array<int8_t, 8>> elems;
  do {
    if (!evenOnly || perm_even(p, n)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  int order = int(elems.size());
  require(order <= maxOrder,
          "order " + std::to_string(order) + " exceeds dense-table bound " +
              std::to_string(maxOrder) + " (n out of supported range)");
  // lexicographic order puts the identity first
  std::map<uint32_t, int> idx;
  for (int i = 0; i < order; ++i) idx[pack_perm(elems[i], n)] = i;
  return table_group(order, label, [&](int x, int y) {
    std::array<int8_t, 8> c{};
    for (int i = 0; i < n; ++i) c[i] = elems[x][elems[y][i]];
    return idx.at(pack_perm(c, n));
  });
}

// ---- SL(2,p) -------------------------------------------------------------

Group sl2(int p, const std::string& label, int maxOrder) {
  require(p == 3 || p == 5 || p == 7, "sl2:p supports p in {3,5,7}");
  struct M {
    int a, b, c, d;
  };
  std::vector<M> elems;
  M id{1, 0, 0, 1};
  elems.push_back(id);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p == 1) {
            if (a == 1 && b == 0 && c == 0 && d == 1) continue;
            elems.push_back(M{a, b, c, d});
          }
        }
  int order = int(elems.size());
  require(order == p * (p * p - 1), "SL(2,p) enumeration is off");
  require(order <= maxOrder, "SL(2,p) exceeds dense-table bound");
  auto key = [p](const M& m) {
    return ((m.a * p + m.b) * p + m.c) * p + m.d;
  };
  std::map<int, int> idx;
  for (int i = 0; i < order; ++i) idx[key(elems[i])] = i;
  return table_group(order, label, [&](int x, int y) {
    const M &u = elems[x], &v = elems[y];
    M w{(u.a * v.a + u.b * v.c) % p, (u.a * v.b + u.b * v.d) % p,
        (u.c * v.a + u.d * v.c) % p, (u.c * v.b + u.d * v.d) % p};
    return idx.at(key(w));
  });
}

// ---- spec parsing --------------------------------------------------------

std::vector<int> parse_int_list(const std::string& s, const std::string& ctx) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), "malformed integer list in " + ctx);
    for (char c : item)
      require(c >= '0' && c <= '9', "malformed integer list in " + ctx);
    out.push_back(std::stoi(item));
  }
  require(!out.empty(), "empty integer list in " + ctx);
  return out;
}

std::optional<Group> try_build(const std::string& spec, int maxOrder) {
  try {
    return build_group(spec, maxOrder);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Splits "specA,specB" at the first comma position where both halves parse.
std::optional<std::pair<Group, Group>> split_two_specs(
    const std::string& args, int maxOrder) {
  for (size_t pos = 0; pos < args.size(); ++pos) {
    if (args[pos] != ',') continue;
    auto ga = try_build(args.substr(0, pos), maxOrder);
    if (!ga) continue;
    auto gb = try_build(args.substr(pos + 1), maxOrder);
    if (gb) return std::make_pair(std::move(*ga), std::move(*gb));
  }
  return std::nullopt;
}

}  // namespace

Group load_table_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), "cannot open table file: " + path);
  int n = 0;
  require(bool(in >> n) && n >= 1, "table file: bad order line");
  require(n <= Limits::kMaxDenseGroup, "table file: order exceeds table cap");
  std::vector<Elem> t(size_t(n) * n);
  for (size_t i = 0; i < t.size(); ++i) {
    int v;
    require(bool(in >> v), "table file: truncated table");
    require(v >= 0 && v < n, "table file: entry out of range");
    t[i] = v;
  }
  std::string label = "file:" + path;
  std::string rest, line;
  std::getline(in, rest);
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) {
      std::string s = line.substr(h + 1);
      while (!s.empty() && s.front() == ' ') s.erase(s.begin());
      if (!s.empty()) label = s;
    }
  }
  return Group::fromTable(std::move(t), label);
}

Group build_group(const std::string& spec, int maxOrder) {
  require(maxOrder <= Limits::kMaxDenseGroup, "maxOrder exceeds hard cap");
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto check_order = [&](int64_t n) {
    require(n <= maxOrder, "order " + std::to_string(n) +
                               " exceeds dense-table bound " +
                               std::to_string(maxOrder) +
                               " (n out of supported range)");
  };

  if (head == "cyclic") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1, "cyclic takes one argument");
    check_order(v[0]);
    return cyclic(v[0], spec);
  }
  if (head == "abelian") {
    auto v = parse_int_list(args, spec);
    int64_t n = 1;
    for (int d : v) n *= d;
    check_order(n);
    return abelian(v, spec);
  }
  if (head == "dihedral") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] >= 2, "dihedral:n needs n >= 2");
    check_order(2 * int64_t(v[0]));
    // b a b^-1 = a^-1
    return semidirect_cyclic(v[0], 2, v[0] - 1, spec);
  }
  if (head == "dicyclic") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] >= 1, "dicyclic:n needs n >= 1");
    check_order(4 * int64_t(v[0]));
    return dicyclic(v[0], spec);
  }
  if (head == "quaternion") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] == 8, "quaternion supports order 8 only");
    return dicyclic(2, spec);
  }
  if (head == "semidihedral") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] == 16, "semidihedral supports order 16");
    return semidirect_cyclic(8, 2, 3, spec);
  }
  if (head == "modular") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] == 16, "modular supports order 16");
    return semidirect_cyclic(8, 2, 5, spec);
  }
  if (head == "sym" || head == "alt") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1 && v[0] >= 1 && v[0] <= 8,
            head + ":n supports n <= 8");
    return perm_group(v[0], head == "alt", spec, maxOrder);
  }
  if (head == "sl2") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1, "sl2 takes one argument");
    return sl2(v[0], spec, maxOrder);
  }
  if (head == "heis") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 1, "heis takes one argument");
    check_order(int64_t(v[0]) * v[0] * v[0]);
    return heisenberg(v[0], spec);
  }
  if (head == "cpq") {
    auto v = parse_int_list(args, spec);
    require(v.size() == 2, "cpq takes p,q");
    int p = v[0], q = v[1];
    require(is_prime(p) && is_prime(q) && (q - 1) % p == 0,
            "cpq:p,q needs primes with q = 1 mod p");
    check_order(int64_t(p) * q);
    // smallest d > 1 of multiplicative order p mod q
    int d = 0;
    for (int cand = 2; cand < q; ++cand) {
      int64_t acc = 1;
      int o = 0;
      do {
        acc = (acc * cand) % q;
        ++o;
      } while (acc != 1);
      if (o == p) {
        d = cand;
        break;
      }
    }
    require(d > 0, "no order-p unit mod q");
    return semidirect_cyclic(q, p, d, spec);
  }
  if (head == "c9xc3semi" && args.empty()) {
    // extraspecial 3^(1+2) of exponent 9: C9 x| C3, action a -> a^4
    return semidirect_cyclic(9, 3, 4, spec);
  }
  if (head == "c4xc4semi" && args.empty()) {
    // C4 x| C4, b a b^-1 = a^-1
    return semidirect_cyclic(4, 4, 3, spec);
  }
  if (head == "c22xc4semi" && args.empty()) {
    // (C2 x C2) x| C4 with the C4 generator swapping the two C2 factors
    return table_group(16, spec, [](int x, int y) {
      int v1 = x % 4, j1 = x / 4, v2 = y % 4, j2 = y / 4;
      int a2 = v2 & 1, b2 = (v2 >> 1) & 1;
      if (j1 % 2 == 1) std::swap(a2, b2);
      int v = ((v1 & 1) ^ a2) | ((((v1 >> 1) & 1) ^ b2) << 1);
      return v + 4 * ((j1 + j2) % 4);
    });
  }
  if (head == "product") {
    auto ab = split_two_specs(args, maxOrder);
    require(bool(ab), "cannot split product arguments: " + spec);
    check_order(int64_t(ab->first.order()) * ab->second.order());
    return direct_product(ab->first, ab->second, spec);
  }
  if (head == "centralprod") {
    auto ab = split_two_specs(args, maxOrder);
    require(bool(ab), "cannot split centralprod arguments: " + spec);
    return central_product(ab->first, ab->second, spec);
  }
  if (head == "file") {
    require(!args.empty(), "file: needs a path");
    return load_table_file(args);
  }
  fail("malformed group spec: " + spec);
}

namespace {

// Invariant-factor chains d1 | d2 | ... | dk with product n (one per
// abelian isomorphism type).
void abelian_chains(int n, int prev, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int d = std::max(2, prev); d <= n; ++d) {
    if (n % d != 0 || d % prev != 0) continue;
    cur.push_back(d);
    abelian_chains(n / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::string> nonabelian_specs(int order) {
  // Registry for orders where the catalog must be complete, plus a few
  // documented extras (the order-120 sweep targets).
  static const std::map<int, std::vector<std::string>> reg = {
      {6, {"sym:3"}},
      {8, {"dihedral:4", "quaternion:8"}},
      {10, {"dihedral:5"}},
      {12, {"dihedral:6", "alt:4", "dicyclic:3"}},
      {14, {"dihedral:7"}},
      {16,
       {"dihedral:8", "dicyclic:4", "semidihedral:16", "modular:16",
        "c4xc4semi", "c22xc4semi", "centralprod:dihedral:4,cyclic:4",
        "product:dihedral:4,cyclic:2", "product:quaternion:8,cyclic:2"}},
      {18, {"dihedral:9", "product:sym:3,cyclic:3"}},
      {20, {"dihedral:10", "dicyclic:5"}},
      {21, {"cpq:3,7"}},
      {22, {"dihedral:11"}},
      {24,
       {"sym:4", "sl2:3", "dihedral:12", "dicyclic:6",
        "product:alt:4,cyclic:2", "product:quaternion:8,cyclic:3",
        "product:dihedral:4,cyclic:3", "product:sym:3,cyclic:4",
        "product:sym:3,abelian:2,2", "product:dicyclic:3,cyclic:2"}},
      {27, {"heis:3", "c9xc3semi"}},
      {120,
       {"sym:5", "sl2:5", "product:alt:5,cyclic:2", "dihedral:60",
        "dicyclic:30", "product:sym:3,abelian:2,10",
        "product:dihedral:5,abelian:2,6"}},
  };
  auto it = reg.find(order);
  if (it == reg.end()) return {};
  return it->second;
}

}  // namespace

std::vector<CatalogEntry> catalog_specs(int order) {
  require(order >= 1, "order must be positive");
  std::vector<CatalogEntry> out;
  if (order == 1) return {{"cyclic:1", 1}};
  out.push_back({"cyclic:" + std::to_string(order), order});
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  abelian_chains(order, 1, cur, chains);
  for (auto& ch : chains) {
    if (ch.size() <= 1) continue;  // cyclic already listed
    std::string s = "abelian:";
    for (size_t i = 0; i < ch.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(ch[i]);
    }
    out.push_back({s, order});
  }
  for (auto& s : nonabelian_specs(order)) out.push_back({s, order});
  return out;
}

bool catalog_complete(int order) {
  return (order >= 1 && order <= 16) || order == 27;
}

int catalog_expected_count(int order) {
  static const std::map<int, int> counts = {
      {1, 1}, {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
      {7, 1}, {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
      {13, 1}, {14, 2}, {15, 1}, {16, 14}, {27, 5}};
  auto it = counts.find(order);
  require(it != counts.end(), "no classification count for this order");
  return it->second;
}

}  // namespace holocount
