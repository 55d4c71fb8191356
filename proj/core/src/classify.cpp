#include "holocount/group.hpp"
#include "holocount/reduction.hpp"

namespace holocount {

GroupClassification classify_group(const Group& g) {
  GroupClassification c;
  c.abelian = g.isAbelian();
  auto comm = structural_subgroup(g, StructuralKind::Commutator);
  c.perfect = comm.size() == g.order();

  if (g.order() == 1) return c;  // trivial group: none of the rest

  auto normals = subgroups_of_order(g, 0, /*normal_only=*/true);
  c.simple = normals.size() == 2;

  if (c.perfect) {
    auto z = structural_subgroup(g, StructuralKind::Center);
    if (z.size() == g.order()) {
      c.quasisimple = false;
    } else {
      auto q = quotient_group(g, z);
      auto qNormals = subgroups_of_order(*q.group, 0, /*normal_only=*/true);
      c.quasisimple = qNormals.size() == 2;
    }
  }

  // characteristically simple: no nontrivial proper characteristic subgroup
  auto self = std::make_shared<const Group>(g);  // local copy for Aut cache
  auto auts = automorphism_group(self);
  auto chars = characteristic_subgroups(*self, *auts);
  int proper = 0;
  for (auto& s : chars.subgroups)
    if (s.size() != 1 && s.size() != g.order()) ++proper;
  if (proper > 0)
    c.characteristically_simple = false;  // witnessed either way
  else {
    require(chars.fullLattice,
            "characteristic simplicity undecidable above the subgroup "
            "enumeration bound");
    c.characteristically_simple = true;
  }
  return c;
}

}  // namespace holocount
