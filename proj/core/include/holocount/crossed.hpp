#ifndef HOLOCOUNT_CROSSED_HPP_
#define HOLOCOUNT_CROSSED_HPP_

#include <functional>
#include <optional>

#include "holocount/holomorph.hpp"

namespace holocount {

// A crossed homomorphism g: G -> N with respect to an action f: G -> Aut(N),
//   g(s1 s2) = g(s1) * f(s1)(g(s2)),
// stored as full image arrays by element id. g(1) = 1 is forced.
struct CrossedHom {
  const Group* g = nullptr;
  const Group* n = nullptr;
  const AutGroup* auts = nullptr;
  std::vector<int32_t> action;  // aut indices, one per element of G
  std::vector<int32_t> images;  // N element ids, one per element of G

  bool isBijective() const {
    std::vector<uint8_t> seen(images.size(), 0);
    for (auto v : images) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }
};

// Full O(|G|^2) verification of the cocycle condition.
bool check_cocycle(const CrossedHom& c);

enum class CocycleMode { All, Bijective, Surjective };

struct CocycleSearchConfig {
  const Group* g = nullptr;
  const Group* n = nullptr;
  // f(x) as raw permutations of N, one per G element (see action_perms)
  const int32_t* const* actionPerms = nullptr;
  const GenChain* chain = nullptr;
  CocycleMode mode = CocycleMode::All;
  int firstMod = 1;
  int firstRes = 0;
};

// Pointer view of an index-valued action, for CocycleSearchConfig.
std::vector<const int32_t*> action_perms(const AutGroup& a,
                                         const std::vector<int32_t>& idx);

// Complete duplicate-free enumeration of Z^1_f(G,N) (or its bijective /
// surjective subset) by backtracking on generator images, propagating along
// the Cayley spanning tree and verifying every remaining generator edge.
// `emit` gets the image array by element id; return false to stop.
void enumerate_cocycles_chain(
    const CocycleSearchConfig& cfg,
    const std::function<bool(const std::vector<int32_t>&)>& emit);

// Convenience collector. Requires |G| == |N| in bijective mode (the
// standing same-order hypothesis).
std::vector<CrossedHom> enumerate_cocycles(const Group& g, const Group& n,
                                           const AutGroup& auts,
                                           const Homomorphism& f,
                                           CocycleMode mode);

// Unique extension of the generator images to a cocycle, or nullopt when
// the propagated map fails some Cayley edge.
std::optional<CrossedHom> extend_cocycle(const Group& g, const Group& n,
                                         const AutGroup& auts,
                                         const Homomorphism& f,
                                         const std::vector<int32_t>& genImages);

// g_eta(s) = eta^-1 * f(s)(eta).
CrossedHom principal_cocycle(const Group& g, const Group& n,
                             const AutGroup& auts, const Homomorphism& f,
                             Elem eta);

// beta_(f,g)(s) = rho(g(s)) * f(s) as a pair in Hol(N). Requires
// check_cocycle(c); the image is regular iff g is bijective.
Homomorphism beta_embed(const Holomorph& hol, const CrossedHom& c);

// rho(N) and lambda(N) as canonical sorted code sets in Hol(N).
std::pair<std::vector<int32_t>, std::vector<int32_t>> canonical_rho_lambda(
    const Holomorph& hol);

// Fixed-point-free pair: f(s) = g(s) only at s = 1.
bool is_fpf(const Homomorphism& f, const Homomorphism& g, const Group& n);
// Weakly fixed point free: s -> f(s) g(s)^-1 surjective (maps into N/Z(N)).
bool is_wfpf(const Homomorphism& f, const Homomorphism& g, const Group& q);

// The liftable-inner-action bijection: for f in Hom(G,N) with
// action = conj . f, a cocycle corresponds to the homomorphism
// s -> g(s) f(s) and back. Both directions verify their preconditions.
Homomorphism fpf_to_hom(const CrossedHom& c, const Homomorphism& f);
CrossedHom fpf_from_hom(const Homomorphism& g, const Homomorphism& f,
                        const Group& n, const AutGroup& auts);

// General inner actions: f maps into N/Z(N) (the quotient q with projection
// proj); the image of a cocycle is s -> g(s)Z(N) * f(s) in the quotient.
Homomorphism wfpf_translate(const CrossedHom& c, const Homomorphism& f,
                            const QuotientResult& q);

// Recognition predicates for the distinguished regular subgroups (they
// must agree with set comparison against rho/lambda on bijective cocycles).
bool beta_is_rho(const CrossedHom& c);
bool beta_is_lambda(const CrossedHom& c, const QuotientResult& centerQuot);

}  // namespace holocount

#endif  // HOLOCOUNT_CROSSED_HPP_
