#ifndef HOLOCOUNT_GROUP_HPP_
#define HOLOCOUNT_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holocount/base.hpp"

namespace holocount {

// A finite group as a dense multiplication table. Index 0 is the identity,
// the table is validated on construction (identity, Latin square, Light's
// associativity test, inverses, Lagrange on element orders) and the object
// is immutable afterwards, so it can be shared freely across threads.
class Group {
 public:
  // `table` is row-major: table[x * n + y] = x*y. Throws Error when the
  // table is not a group table or the identity is not at index 0.
  static Group fromTable(std::vector<Elem> table, std::string label);

  int order() const { return n_; }
  Elem mul(Elem x, Elem y) const { return mul_[size_t(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  int elemOrder(Elem x) const { return ord_[x]; }
  bool isAbelian() const { return abelian_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  uint64_t tableHash() const { return hash_; }

  Elem conjugate(Elem g, Elem x) const {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  Elem commutator(Elem x, Elem y) const {  // x y x^-1 y^-1
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  Elem power(Elem x, int64_t k) const;

  int classOf(Elem x) const { return classId_[x]; }
  int classSize(Elem x) const { return classSize_[classId_[x]]; }
  int numClasses() const { return int(classSize_.size()); }

  // (element order, conjugacy class size); invariant under isomorphism.
  uint64_t fingerprint(Elem x) const {
    return (uint64_t(ord_[x]) << 32) | uint32_t(classSize(x));
  }

 private:
  Group() = default;
  void finalize();  // computes inv/ord/classes/generators/hash, validates

  int n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int32_t> ord_;
  std::vector<Elem> gens_;
  std::vector<int32_t> classId_;
  std::vector<int32_t> classSize_;
  std::string label_;
  uint64_t hash_ = 0;
  bool abelian_ = false;
};

struct SubgroupHandle {
  const Group* parent = nullptr;
  std::vector<Elem> elems;  // sorted, always contains 0

  int size() const { return int(elems.size()); }
  bool contains(Elem x) const;
  bool isNormal() const;
};

struct GroupIso {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<Elem> map;  // map[x] in target
};

struct QuotientResult {
  std::shared_ptr<const Group> group;
  std::vector<Elem> proj;  // parent element -> quotient element
};

enum class StructuralKind { Center, Commutator, Frattini, Power };

// Smallest subgroup containing `seed`; elements come back sorted.
SubgroupHandle generated_subgroup(const Group& g, const std::vector<Elem>& seed);

SubgroupHandle structural_subgroup(const Group& g, StructuralKind kind,
                                   int p = 0);

// Quotient by a normal subgroup; throws when m is not normal.
QuotientResult quotient_group(const Group& g, const SubgroupHandle& m);

// Complete duplicate-free list in deterministic order. `k == 0` lists all
// orders. Full mode is bounded by Limits::kSubgroupEnumBound, normal-only
// by Limits::kNormalEnumBound.
std::vector<SubgroupHandle> subgroups_of_order(const Group& g, int k,
                                               bool normal_only);

// First isomorphism witness under lexicographic generator-image order,
// or nullopt. Implemented in the morphisms component.
std::optional<GroupIso> find_isomorphism(const Group& g, const Group& h);

struct GroupClassification {
  bool abelian = false;
  bool perfect = false;
  bool simple = false;
  bool quasisimple = false;
  bool characteristically_simple = false;
};

// Flags straight from the definitions; simplicity and characteristic
// simplicity need the normal/characteristic enumeration bounds.
GroupClassification classify_group(const Group& g);

bool is_prime(int64_t n);
// n = p^k with p prime? Returns p via out param.
bool is_prime_power(int64_t n, int64_t* p = nullptr);

}  // namespace holocount

#endif  // HOLOCOUNT_GROUP_HPP_
