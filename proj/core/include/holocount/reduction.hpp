#ifndef HOLOCOUNT_REDUCTION_HPP_
#define HOLOCOUNT_REDUCTION_HPP_

#include "holocount/crossed.hpp"

namespace holocount {

struct CharSubgroupList {
  std::vector<SubgroupHandle> subgroups;  // sorted by (size, elements)
  bool fullLattice = false;  // true: filtered complete subgroup lattice;
                             // false: verified canonical family only
};

// Full mode filters every subgroup by Aut-stability (|N| within the
// subgroup enumeration bound); the fallback returns the canonical family
// {1, center, commutator, Frattini, p-power subgroups, N}, each verified
// characteristic against the given AutGroup.
CharSubgroupList characteristic_subgroups(const Group& n, const AutGroup& auts);

// A maximal proper characteristic subgroup (largest order, ties broken by
// lexicographic element set); nullopt for the trivial group.
std::optional<SubgroupHandle> maximal_characteristic_subgroup(
    const Group& n, const AutGroup& auts);

struct CharSimpleShape {
  std::string t_label;  // simple type of T
  int64_t t_order = 0;
  int m = 0;  // N/M = T^m
};

// Shape of the characteristically simple quotient N/M.
CharSimpleShape char_simple_shape(const Group& quotient);

// Push-forward of (f, g) modulo a characteristic subgroup M:
// fbar: G -> Aut(N/M), gbar: G -> N/M, plus ker(gbar).
struct ReducedPair {
  std::shared_ptr<const Group> quotient;
  std::shared_ptr<const AutGroup> quotientAuts;
  std::vector<Elem> proj;           // N -> N/M
  std::vector<int32_t> fbar;        // aut indices in Aut(N/M), by G element
  std::vector<int32_t> gbarImages;  // N/M elements, by G element
  SubgroupHandle kernel;            // ker(gbar) <= G
};

ReducedPair reduce_pair(const CrossedHom& c, const SubgroupHandle& m);

struct PrunePrecomp;  // opaque per-(G,N,M) state, defined in reduction.cpp

// Same push-forward from a prepared per-(G,N,M) state; avoids rebuilding
// the quotient and its automorphism group for every pair.
ReducedPair reduce_pair_prepared(const PrunePrecomp& pre,
                                 const std::vector<int32_t>& action,
                                 const std::vector<int32_t>& images);

struct ModCharChecks {
  bool kernelIsSubgroup = false;   // (a)
  bool inducedInjective = false;   // (b)
  bool kerFbarHom = false;         // (c)
  bool abelianFixed = false;       // (d), vacuous true if N/M non-abelian
  bool all() const {
    return kernelIsSubgroup && inducedInjective && kerFbarHom && abelianFixed;
  }
};

ModCharChecks verify_mod_char(const ReducedPair& rp, const CrossedHom& c,
                              const SubgroupHandle& m);

// Sound branch prune: true when no crossed homomorphism of the pushed-down
// action is surjective onto N/M (so no bijective g exists upstream). For
// cyclic G of odd p-power order against a non-cyclic p-group N with
// M = Phi(N), the index bounds [C:ker] <= p resp. p^(r+1) < [N:M] decide
// without enumeration.
std::shared_ptr<PrunePrecomp> prepare_prune(
    const std::shared_ptr<const Group>& g,
    const std::shared_ptr<const Group>& n,
    const std::shared_ptr<const AutGroup>& auts, const SubgroupHandle& m);
bool quotient_prune(PrunePrecomp& pre, const std::vector<int32_t>& action);
// True when the index bounds decide the whole pair (no per-action work).
bool prune_is_unconditional(const PrunePrecomp& pre);
// False when this M cannot prune anything (trivial M, no fast path).
bool prune_is_usable(const PrunePrecomp& pre);

// v_p(n): exponent of the exact p-power dividing n.
int valuation(int64_t n, int64_t p);
// v_p(m!) by the Legendre sum of floor(m / p^i).
int factorial_valuation(int64_t m, int64_t p);
// |GL_m(Z/pZ)| = prod_{i<m} (p^m - p^i).
int64_t gl_order(int m, int64_t p);
int gl_valuation(int m, int64_t p);  // v_p of the above, = m(m-1)/2

}  // namespace holocount

#endif  // HOLOCOUNT_REDUCTION_HPP_
