#include "doctest.h"
#include "holocount/catalog.hpp"
#include "holocount/count.hpp"
#include "holocount/oracle.hpp"

using namespace holocount;

namespace {
std::shared_ptr<const Group> make(const std::string& spec) {
  return std::make_shared<const Group>(build_group(spec));
}
}  // namespace

TEST_CASE("brute regular-subgroup counts in the holomorph") {
  CHECK(brute_reg_subgroups_hol(make("cyclic:6"), *make("cyclic:6")) == 1);
  CHECK(brute_reg_subgroups_hol(make("abelian:3,3"), *make("cyclic:9")) == 0);
  // Hol(C2xC2) = S4: the three cyclic regular subgroups generated by
  // 4-cycles, and the normal Klein four group
  CHECK(brute_reg_subgroups_hol(make("abelian:2,2"), *make("cyclic:4")) == 3);
  CHECK(brute_reg_subgroups_hol(make("abelian:2,2"), *make("abelian:2,2")) ==
        1);
}

TEST_CASE("the quasisimple desk target: Hol(A5)") {
  auto a5 = make("alt:5");
  CHECK(brute_reg_subgroups_hol(a5, *a5, /*maxN=*/60) == 2);
}

TEST_CASE("oracle bound is enforced") {
  CHECK_THROWS_AS(brute_reg_subgroups_hol(make("cyclic:25"), *make("cyclic:25")),
                  Error);
}

TEST_CASE("oracle agrees with the pipeline on mixed pairs") {
  CountOptions opt;
  opt.workers = 2;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"cyclic:8", "cyclic:8"},       {"quaternion:8", "dihedral:4"},
      {"dihedral:4", "quaternion:8"}, {"cyclic:12", "cyclic:12"},
      {"alt:4", "dicyclic:3"},        {"dicyclic:3", "alt:4"}};
  for (const auto& [gs, ns] : pairs) {
    auto g = make(gs);
    auto n = make(ns);
    auto rep = count_reg(g, n, opt);
    CHECK(brute_reg_subgroups_hol(n, *g) == rep.subgroupCount);
  }
}

TEST_CASE("regular subgroups of Perm(G) normalized by lambda(G)") {
  SUBCASE("the trivial group has exactly the classical structure") {
    CHECK(brute_gp_count(*make("cyclic:1")) == 1);
  }
  SUBCASE("cyclic quartic: both types contribute") {
    CountOptions opt;
    opt.workers = 2;
    auto c4 = make("cyclic:4");
    int64_t viaHol = count_reg(c4, make("cyclic:4"), opt).eValue +
                     count_reg(c4, make("abelian:2,2"), opt).eValue;
    CHECK(brute_gp_count(*c4) == viaHol);
    CHECK(brute_gp_count(*c4) == 2);  // 1 + 1
  }
  SUBCASE("cyclic sextic") {
    CountOptions opt;
    opt.workers = 2;
    auto c6 = make("cyclic:6");
    int64_t viaHol = count_reg(c6, make("cyclic:6"), opt).eValue +
                     count_reg(c6, make("sym:3"), opt).eValue;
    CHECK(brute_gp_count(*c6) == viaHol);
  }
  SUBCASE("bound enforcement and the order-8 flag") {
    CHECK_THROWS_AS(brute_gp_count(*make("cyclic:8")), Error);
    CHECK(brute_gp_count(*make("cyclic:8"), /*allowOrder8=*/true) > 0);
  }
}
