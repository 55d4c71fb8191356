#ifndef HOLOCOUNT_HOLOMORPH_HPP_
#define HOLOCOUNT_HOLOMORPH_HPP_

#include <memory>
#include <vector>

#include "holocount/morphisms.hpp"

namespace holocount {

// Hol(N) = rho(N) x| Aut(N) as pairs (a, phi), encoded a * |Aut| + phi.
// Composition: (a1,p1)(a2,p2) = (a1 * p1(a2), p1 o p2).
// Action on N:  (a,phi) sends x to phi(x) * a^-1, so evaluation at the
// identity gives a^-1 and the pair (a, id) is rho(a).
class Holomorph {
 public:
  Holomorph(std::shared_ptr<const Group> n,
            std::shared_ptr<const AutGroup> auts);

  const Group& base() const { return *n_; }
  const AutGroup& auts() const { return *auts_; }
  int64_t size() const { return int64_t(n_->order()) * auts_->size(); }

  int32_t encode(Elem a, int32_t phi) const { return a * auts_->size() + phi; }
  Elem transPart(int32_t h) const { return h / auts_->size(); }
  int32_t autPart(int32_t h) const { return h % auts_->size(); }

  int32_t op(int32_t h1, int32_t h2) const {
    int32_t na = auts_->size();
    int32_t a1 = h1 / na, p1 = h1 % na, a2 = h2 / na, p2 = h2 % na;
    return n_->mul(a1, auts_->apply(p1, a2)) * na + auts_->compose(p1, p2);
  }
  int32_t inverse(int32_t h) const {
    int32_t na = auts_->size();
    int32_t a = h / na, p = h % na;
    int32_t pi = auts_->inverseOf(p);
    return auts_->apply(pi, n_->inv(a)) * na + pi;
  }
  // the permutation action on N
  Elem act(int32_t h, Elem x) const {
    int32_t na = auts_->size();
    return n_->mul(auts_->apply(h % na, x), n_->inv(h / na));
  }
  int orderOf(int32_t h) const;
  bool isFixedPointFree(int32_t h) const;  // no x with act(h,x) == x

  // carrier interface (orders are cached on first use)
  int32_t carrierSize() const;
  int32_t carrierOp(int32_t a, int32_t b) const { return op(a, b); }
  int32_t carrierInv(int32_t a) const { return inverse(a); }
  int32_t carrierOrder(int32_t a) const;

  // Dense materialization as a Group (element i = i-th code), only below
  // Limits::kHolomorphDenseBound.
  std::shared_ptr<const Group> denseGroup() const;

  // rho(N) = {(a, id)} and lambda(N) = {(eta^-1, conj(eta))}, sorted codes.
  std::vector<int32_t> rhoSet() const;
  std::vector<int32_t> lambdaSet() const;

 private:
  std::shared_ptr<const Group> n_;
  std::shared_ptr<const AutGroup> auts_;
  mutable std::vector<int32_t> ordCache_;
  mutable std::shared_ptr<const Group> dense_;
};

std::shared_ptr<const Holomorph> build_holomorph(
    std::shared_ptr<const Group> n);

// Closure of a set of codes under the pair law, sorted. Throws if the
// closure would exceed maxSize (0 = |Hol|).
std::vector<int32_t> hol_closure(const Holomorph& hol,
                                 const std::vector<int32_t>& seed,
                                 int64_t maxSize = 0);

// True iff S is a subgroup (checked) of size |N| whose evaluation map at
// the identity hits every element of N exactly once.
bool is_regular_subset(const Holomorph& hol, const std::vector<int32_t>& s);

// Materialize a subgroup given by codes as a fresh Group; codes[i] is
// element i... identity code first, rest in ascending code order.
std::shared_ptr<const Group> hol_subgroup_group(
    const Holomorph& hol, const std::vector<int32_t>& codes,
    const std::string& label);

}  // namespace holocount

#endif  // HOLOCOUNT_HOLOMORPH_HPP_
