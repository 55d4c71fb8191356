#include <set>

#include "doctest.h"
#include "holocount/catalog.hpp"
#include "holocount/morphisms.hpp"

using namespace holocount;

TEST_CASE("catalog is complete and irredundant for orders 1..16 and 27") {
  std::vector<int> orders;
  for (int o = 1; o <= 16; ++o) orders.push_back(o);
  orders.push_back(27);
  for (int order : orders) {
    CAPTURE(order);
    CHECK(catalog_complete(order));
    auto specs = catalog_specs(order);
    CHECK(int(specs.size()) == catalog_expected_count(order));
    std::vector<Group> groups;
    for (auto& e : specs) {
      groups.push_back(build_group(e.spec));
      CHECK(groups.back().order() == order);
    }
    // pairwise non-isomorphic: together with the classification count this
    // certifies completeness
    for (size_t i = 0; i < groups.size(); ++i)
      for (size_t j = i + 1; j < groups.size(); ++j) {
        CAPTURE(specs[i].spec);
        CAPTURE(specs[j].spec);
        CHECK(!find_isomorphism(groups[i], groups[j]).has_value());
      }
  }
}

TEST_CASE("catalog 120 is flagged partial and contains the sweep targets") {
  CHECK(!catalog_complete(120));
  auto specs = catalog_specs(120);
  std::set<std::string> names;
  for (auto& e : specs) names.insert(e.spec);
  for (const char* want : {"cyclic:120", "sym:5", "sl2:5",
                           "product:alt:5,cyclic:2", "dihedral:60"})
    CHECK(names.count(want) == 1);
  for (auto& e : specs) CHECK(build_group(e.spec).order() == 120);
}

TEST_CASE("quaternion:8 is dicyclic:2") {
  Group q8 = build_group("quaternion:8");
  Group dic2 = build_group("dicyclic:2");
  CHECK(find_isomorphism(q8, dic2).has_value());
}

TEST_CASE("the order-16 exotics have the expected fingerprints") {
  // involution counts separate most of the 14 types
  auto involutions = [](const Group& g) {
    int c = 0;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.elemOrder(x) == 2) ++c;
    return c;
  };
  CHECK(involutions(build_group("c22xc4semi")) == 7);
  CHECK(involutions(build_group("product:dihedral:4,cyclic:2")) == 11);
  CHECK(involutions(build_group("semidihedral:16")) == 5);
  CHECK(involutions(build_group("modular:16")) == 3);
  CHECK(involutions(build_group("dicyclic:4")) == 1);
  CHECK(involutions(build_group("dihedral:8")) == 9);
  // the central product D4 o C4 keeps the cyclic factor central
  Group pauli = build_group("centralprod:dihedral:4,cyclic:4");
  CHECK(pauli.order() == 16);
  auto z = structural_subgroup(pauli, StructuralKind::Center);
  CHECK(z.size() == 4);
  CHECK(z.elems == generated_subgroup(pauli, z.elems).elems);
  // and coincides with Q8 o C4
  Group q8c4 = build_group("centralprod:quaternion:8,cyclic:4");
  CHECK(find_isomorphism(pauli, q8c4).has_value());
}

TEST_CASE("abelian invariant-factor chains are canonical") {
  auto specs = catalog_specs(16);
  int abelianCount = 0;
  for (auto& e : specs)
    if (e.spec.rfind("abelian:", 0) == 0 || e.spec.rfind("cyclic:", 0) == 0)
      ++abelianCount;
  CHECK(abelianCount == 5);
  // product in any factor order builds the same group up to isomorphism
  Group a = build_group("abelian:3,2");
  Group b = build_group("abelian:2,3");
  Group c = build_group("cyclic:6");
  CHECK(find_isomorphism(a, c).has_value());
  CHECK(find_isomorphism(b, c).has_value());
}

TEST_CASE("product spec parsing handles nested commas") {
  Group g = build_group("product:abelian:2,2,cyclic:2");
  CHECK(g.order() == 8);
  CHECK(find_isomorphism(g, build_group("abelian:2,2,2")).has_value());
  Group h = build_group("product:alt:5,cyclic:2");
  CHECK(h.order() == 120);
}
