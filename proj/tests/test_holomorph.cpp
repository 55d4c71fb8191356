#include <algorithm>

#include "doctest.h"
#include "holocount/catalog.hpp"
#include "holocount/crossed.hpp"

using namespace holocount;

namespace {
std::shared_ptr<const Group> make(const std::string& spec) {
  return std::make_shared<const Group>(build_group(spec));
}
}  // namespace

TEST_CASE("holomorph sizes") {
  auto c6 = build_holomorph(make("cyclic:6"));
  CHECK(c6->size() == 12);  // 6 * |Aut(C6)| with |Aut(C6)| = 2
  CHECK(c6->auts().size() == 2);
  auto c44 = build_holomorph(make("abelian:4,4"));
  CHECK(c44->size() == 1536);  // 16 * 96
}

TEST_CASE("pair law is a group law (dense materialization validates)") {
  // Group::fromTable checks identity, Latin square, associativity
  for (const char* spec : {"cyclic:6", "sym:3", "cyclic:8", "dihedral:4"}) {
    auto hol = build_holomorph(make(spec));
    if (hol->size() <= 200) {
      auto dense = hol->denseGroup();
      CHECK(dense->order() == hol->size());
    }
  }
}

TEST_CASE("the action of Hol(N) on N") {
  auto np = make("sym:3");
  auto hol = build_holomorph(np);
  const Group& n = *np;
  SUBCASE("(a, id) is right translation by a^-1") {
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem x = 0; x < n.order(); ++x)
        CHECK(hol->act(hol->encode(a, 0), x) == n.mul(x, n.inv(a)));
  }
  SUBCASE("(1, phi) applies phi") {
    for (int32_t p = 0; p < hol->auts().size(); ++p)
      for (Elem x = 0; x < n.order(); ++x)
        CHECK(hol->act(hol->encode(0, p), x) == hol->auts().apply(p, x));
  }
  SUBCASE("evaluation at the identity gives a^-1") {
    for (Elem a = 0; a < n.order(); ++a)
      for (int32_t p = 0; p < hol->auts().size(); ++p)
        CHECK(hol->act(hol->encode(a, p), 0) == n.inv(a));
  }
  SUBCASE("action respects composition (exhaustive, |Hol| = 36)") {
    for (int32_t h1 = 0; h1 < hol->size(); ++h1)
      for (int32_t h2 = 0; h2 < hol->size(); ++h2)
        for (Elem x = 0; x < n.order(); ++x)
          CHECK(hol->act(hol->op(h1, h2), x) ==
                hol->act(h1, hol->act(h2, x)));
  }
}

TEST_CASE("regularity tests") {
  auto np = make("dihedral:4");
  auto hol = build_holomorph(np);
  SUBCASE("rho(N) is regular") {
    CHECK(is_regular_subset(*hol, hol->rhoSet()));
    CHECK(is_regular_subset(*hol, hol->lambdaSet()));
  }
  SUBCASE("the automorphism part fixes the identity, never regular") {
    // |Aut(D4)| = 8 = |D4|, so this subgroup has the right size but every
    // element fixes 1
    std::vector<int32_t> autPart;
    for (int32_t p = 0; p < hol->auts().size(); ++p)
      autPart.push_back(hol->encode(0, p));
    std::sort(autPart.begin(), autPart.end());
    REQUIRE(int64_t(autPart.size()) == int64_t(np->order()));
    CHECK(!is_regular_subset(*hol, autPart));
  }
  SUBCASE("non-closed sets are rejected") {
    std::vector<int32_t> notClosed{0, hol->encode(1, 1)};
    CHECK_THROWS_AS(is_regular_subset(*hol, notClosed), Error);
  }
}

TEST_CASE("rho and lambda coincide exactly for abelian N") {
  for (const char* spec :
       {"cyclic:6", "abelian:2,2", "abelian:4,4", "cyclic:12", "sym:3",
        "dihedral:4", "quaternion:8", "alt:4", "heis:3"}) {
    auto np = make(spec);
    auto hol = build_holomorph(np);
    auto [rho, lambda] = canonical_rho_lambda(*hol);
    CHECK(is_regular_subset(*hol, rho));
    CHECK(is_regular_subset(*hol, lambda));
    CHECK((rho == lambda) == np->isAbelian());
    // both isomorphic to N
    auto rg = hol_subgroup_group(*hol, rho, "rho");
    auto lg = hol_subgroup_group(*hol, lambda, "lambda");
    CHECK(find_isomorphism(*rg, *np).has_value());
    CHECK(find_isomorphism(*lg, *np).has_value());
  }
}

TEST_CASE("conj(eta) = rho(eta) lambda(eta) as pairs") {
  auto np = make("sym:3");
  auto hol = build_holomorph(np);
  const Group& n = *np;
  for (Elem eta = 0; eta < n.order(); ++eta) {
    int32_t rho = hol->encode(eta, 0);
    int32_t lambda = hol->encode(n.inv(eta), hol->auts().conjIndex(eta));
    int32_t conjPair = hol->encode(0, hol->auts().conjIndex(eta));
    CHECK(hol->op(rho, lambda) == conjPair);
    for (Elem x = 0; x < n.order(); ++x)
      CHECK(hol->act(conjPair, x) == n.conjugate(eta, x));
  }
}

TEST_CASE("every element of Hol(N) normalizes lambda(N), |N| <= 12") {
  for (const char* spec : {"cyclic:6", "sym:3", "dihedral:4", "quaternion:8",
                           "dihedral:6", "alt:4", "cyclic:12"}) {
    auto np = make(spec);
    auto hol = build_holomorph(np);
    auto lambda = hol->lambdaSet();
    for (int64_t h = 0; h < hol->size(); ++h) {
      int32_t hi = int32_t(h);
      int32_t hInv = hol->inverse(hi);
      for (int32_t l : lambda) {
        int32_t conj = hol->op(hol->op(hi, l), hInv);
        CHECK(std::binary_search(lambda.begin(), lambda.end(), conj));
      }
    }
  }
}

TEST_CASE("the explicit affine pair in Hol(C4 x C4)") {
  auto np = make("abelian:4,4");
  auto hol = build_holomorph(np);
  auto vec = [](int v0, int v1) { return Elem(v0 + 4 * v1); };
  // eta2(x) = A2 x + b2 with A2 = [[3,2],[2,3]], b2 = (1,2)
  std::vector<int32_t> a2perm(16);
  for (int v0 = 0; v0 < 4; ++v0)
    for (int v1 = 0; v1 < 4; ++v1)
      a2perm[vec(v0, v1)] = vec((3 * v0 + 2 * v1) % 4, (2 * v0 + 3 * v1) % 4);
  int32_t a2 = hol->auts().indexOfPerm(a2perm);
  REQUIRE(a2 >= 0);
  int32_t eta1 = hol->encode(vec(3, 3), 0);   // x + (1,1)
  int32_t eta2 = hol->encode(vec(3, 2), a2);  // A2 x + (1,2)
  // sanity: the pairs act as stated
  for (int v0 = 0; v0 < 4; ++v0)
    for (int v1 = 0; v1 < 4; ++v1) {
      CHECK(hol->act(eta1, vec(v0, v1)) == vec((v0 + 1) % 4, (v1 + 1) % 4));
      CHECK(hol->act(eta2, vec(v0, v1)) ==
            vec((3 * v0 + 2 * v1 + 1) % 4, (2 * v0 + 3 * v1 + 2) % 4));
    }
  auto gen = hol_closure(*hol, {eta1, eta2});
  CHECK(gen.size() == 16);
  CHECK(is_regular_subset(*hol, gen));
  auto sub = hol_subgroup_group(*hol, gen, "eta-pair");
  CHECK(find_isomorphism(*sub, *np).has_value());
  CHECK(gen != hol->rhoSet());
}
