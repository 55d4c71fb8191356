#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "holocount/catalog.hpp"
#include "holocount/group.hpp"

using namespace holocount;

namespace {

std::multiset<int> order_multiset(const Group& g) {
  std::multiset<int> out;
  for (Elem x = 0; x < g.order(); ++x) out.insert(g.elemOrder(x));
  return out;
}

}  // namespace

TEST_CASE("cyclic:6 structure") {
  Group g = build_group("cyclic:6");
  CHECK(g.order() == 6);
  CHECK(order_multiset(g) == std::multiset<int>{1, 2, 3, 3, 6, 6});
  CHECK(g.isAbelian());
}

TEST_CASE("sl2:5 is the double cover of A5") {
  Group g = build_group("sl2:5");
  CHECK(g.order() == 120);
  auto z = structural_subgroup(g, StructuralKind::Center);
  CHECK(z.size() == 2);
  // unique involution, so the center is the only order-2 subgroup
  int involutions = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.elemOrder(x) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("alt:5 is simple (normal subgroup enumeration)") {
  Group g = build_group("alt:5");
  CHECK(g.order() == 60);
  auto normals = subgroups_of_order(g, 0, /*normal_only=*/true);
  REQUIRE(normals.size() == 2);
  CHECK(normals[0].size() == 1);
  CHECK(normals[1].size() == 60);
}

TEST_CASE("generated subgroups") {
  Group a5 = build_group("alt:5");
  auto triv = generated_subgroup(a5, {0});
  CHECK(triv.size() == 1);
  // any element of order 3 generates a C3
  Elem threeCycle = -1;
  for (Elem x = 0; x < a5.order(); ++x)
    if (a5.elemOrder(x) == 3) {
      threeCycle = x;
      break;
    }
  REQUIRE(threeCycle >= 0);
  CHECK(generated_subgroup(a5, {threeCycle}).size() == 3);
}

TEST_CASE("structural subgroups") {
  SUBCASE("frattini of an elementary abelian group is trivial") {
    Group g = build_group("abelian:2,2,2");
    CHECK(structural_subgroup(g, StructuralKind::Frattini, 2).size() == 1);
  }
  SUBCASE("frattini(C9 x C3) computed two ways") {
    Group g = build_group("abelian:9,3");
    auto frat = structural_subgroup(g, StructuralKind::Frattini, 3);
    CHECK(frat.size() == 3);
    // independent route: closure of the cube-map image
    std::vector<Elem> cubes;
    for (Elem x = 0; x < g.order(); ++x) cubes.push_back(g.power(x, 3));
    auto viaCubes = generated_subgroup(g, cubes);
    CHECK(viaCubes.elems == frat.elems);
  }
  SUBCASE("center and commutator of heis:3 coincide") {
    Group g = build_group("heis:3");
    auto z = structural_subgroup(g, StructuralKind::Center);
    auto comm = structural_subgroup(g, StructuralKind::Commutator);
    auto frat = structural_subgroup(g, StructuralKind::Frattini, 3);
    CHECK(z.size() == 3);
    CHECK(z.elems == comm.elems);
    CHECK(z.elems == frat.elems);
  }
}

TEST_CASE("quotients") {
  SUBCASE("sl2:5 / center is A5") {
    Group g = build_group("sl2:5");
    auto z = structural_subgroup(g, StructuralKind::Center);
    auto q = quotient_group(g, z);
    CHECK(q.group->order() == 60);
    Group a5 = build_group("alt:5");
    CHECK(find_isomorphism(*q.group, a5).has_value());
  }
  SUBCASE("heis:3 / frattini is elementary abelian of order 9") {
    Group g = build_group("heis:3");
    auto frat = structural_subgroup(g, StructuralKind::Frattini, 3);
    auto q = quotient_group(g, frat);
    CHECK(q.group->order() == 9);
    Group target = build_group("abelian:3,3");
    CHECK(find_isomorphism(*q.group, target).has_value());
  }
  SUBCASE("G / G is trivial; projection is a homomorphism") {
    Group g = build_group("sym:3");
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < g.order(); ++x) all[x] = x;
    auto q = quotient_group(g, SubgroupHandle{&g, all});
    CHECK(q.group->order() == 1);

    auto z = structural_subgroup(build_group("heis:3"), StructuralKind::Center);
    Group h = build_group("heis:3");
    auto zh = structural_subgroup(h, StructuralKind::Center);
    auto qh = quotient_group(h, zh);
    for (Elem x = 0; x < h.order(); ++x)
      for (Elem y = 0; y < h.order(); ++y)
        CHECK(qh.proj[h.mul(x, y)] ==
              qh.group->mul(qh.proj[x], qh.proj[y]));
  }
}

TEST_CASE("subgroups of a given order") {
  SUBCASE("cyclic:4 has exactly one order-2 subgroup") {
    Group g = build_group("cyclic:4");
    CHECK(subgroups_of_order(g, 2, false).size() == 1);
  }
  SUBCASE("normal subgroups of sym:5 have sizes 1, 60, 120") {
    Group g = build_group("sym:5");
    auto normals = subgroups_of_order(g, 0, true);
    std::vector<int> sizes;
    for (auto& s : normals) sizes.push_back(s.size());
    CHECK(sizes == std::vector<int>{1, 60, 120});
  }
  SUBCASE("order-6 subgroups of dihedral:6 vs exhaustive subset check") {
    Group g = build_group("dihedral:6");
    REQUIRE(g.order() == 12);
    auto subs = subgroups_of_order(g, 6, false);
    // independent oracle: test all 6-element subsets containing 0
    std::set<std::vector<Elem>> brute;
    std::vector<Elem> pool;
    for (Elem x = 1; x < 12; ++x) pool.push_back(x);
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<Elem> cand{0};
      for (size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) cand.push_back(pool[i]);
      bool closed = true;
      for (Elem a : cand) {
        for (Elem b : cand) {
          if (!std::binary_search(cand.begin(), cand.end(), g.mul(a, b))) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
      if (closed) brute.insert(cand);
    } while (std::next_permutation(pick.begin(), pick.end()));
    CHECK(brute.size() == subs.size());
    for (auto& s : subs) CHECK(brute.count(s.elems) == 1);
  }
}

TEST_CASE("isomorphism testing") {
  Group c6 = build_group("cyclic:6");
  Group c3xc2 = build_group("abelian:3,2");
  auto iso = find_isomorphism(c6, c3xc2);
  REQUIRE(iso.has_value());
  // witness really is an isomorphism
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      CHECK(iso->map[c6.mul(x, y)] == c3xc2.mul(iso->map[x], iso->map[y]));

  Group s3 = build_group("sym:3");
  CHECK(!find_isomorphism(s3, c6).has_value());

  // success is symmetric
  CHECK(find_isomorphism(c3xc2, c6).has_value());
  Group d4 = build_group("dihedral:4");
  Group q8 = build_group("quaternion:8");
  CHECK(!find_isomorphism(d4, q8).has_value());
  CHECK(!find_isomorphism(q8, d4).has_value());
}

TEST_CASE("classification flags") {
  auto a5 = classify_group(build_group("alt:5"));
  CHECK(a5.perfect);
  CHECK(a5.simple);
  CHECK(a5.quasisimple);
  CHECK(!a5.abelian);
  CHECK(a5.characteristically_simple);  // simple implies char-simple

  auto sl = classify_group(build_group("sl2:5"));
  CHECK(sl.perfect);
  CHECK(sl.quasisimple);
  CHECK(!sl.simple);
  CHECK(!sl.characteristically_simple);

  auto ea = classify_group(build_group("abelian:3,3"));
  CHECK(ea.abelian);
  CHECK(ea.characteristically_simple);
  CHECK(!ea.perfect);
}

TEST_CASE("table files") {
  const char* path = "/tmp/holocount_c3.tbl";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n# C3 from file\n";
  }
  Group g = load_table_file(path);
  CHECK(g.order() == 3);
  CHECK(g.label() == "C3 from file");
  CHECK(order_multiset(g) == std::multiset<int>{1, 3, 3});
  std::remove(path);

  const char* bad = "/tmp/holocount_bad.tbl";
  {
    std::ofstream out(bad);
    out << "2\n1 0\n0 1\n";  // index 0 is not the identity
  }
  CHECK_THROWS_AS(load_table_file(bad), Error);
  std::remove(bad);

  const char* bad2 = "/tmp/holocount_bad2.tbl";
  {
    std::ofstream out(bad2);
    out << "3\n0 1 2\n1 0 0\n2 2 1\n";  // not a Latin square
  }
  CHECK_THROWS_AS(load_table_file(bad2), Error);
  std::remove(bad2);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(build_group("nonsense:12"), Error);
  CHECK_THROWS_AS(build_group("cyclic:"), Error);
  CHECK_THROWS_AS(build_group("sym:9"), Error);
  CHECK_THROWS_AS(build_group("sym:8"), Error);   // exceeds dense bound
  CHECK_THROWS_AS(build_group("heis:2"), Error);  // p must be odd
  CHECK_THROWS_AS(build_group("cpq:3,5"), Error); // 5 != 1 mod 3
}

TEST_CASE("element order divides group order across the catalog") {
  for (int order : {6, 8, 12, 16, 24, 27}) {
    for (auto& e : catalog_specs(order)) {
      Group g = build_group(e.spec);
      REQUIRE(g.order() == order);
      for (Elem x = 0; x < g.order(); ++x)
        CHECK(g.order() % g.elemOrder(x) == 0);
      // generators generate (re-close and compare)
      auto cl = generated_subgroup(g, g.generators());
      CHECK(cl.size() == g.order());
    }
  }
}
