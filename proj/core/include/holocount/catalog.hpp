#ifndef HOLOCOUNT_CATALOG_HPP_
#define HOLOCOUNT_CATALOG_HPP_

#include <memory>
#include <string>
#include <vector>

#include "holocount/group.hpp"

namespace holocount {

// Builds a group from a spec string. Supported forms:
//   cyclic:n                      abelian:d1,d2,...
//   dihedral:n      (order 2n)    dicyclic:n        (order 4n)
//   quaternion:8    (= dicyclic:2)
//   sym:n  alt:n    (dense-table bound applies)
//   sl2:p           (p in {3,5,7})
//   heis:p          (order p^3, exponent p, p odd)
//   cpq:p,q         (C_q x| C_p, q = 1 mod p)
//   c9xc3semi       (C9 x| C3, order 27)
//   semidihedral:16  modular:16  c4xc4semi  c22xc4semi
//   product:specA,specB
//   centralprod:specA,specB  (identify the least central involutions)
//   file:path       (table file, see load_table_file)
// maxOrder caps the dense table size (<= Limits::kMaxDenseGroup).
Group build_group(const std::string& spec,
                  int maxOrder = Limits::kDefaultDenseGroup);

// Table file format: line 1 is the order n, lines 2..n+1 hold n
// whitespace-separated element indices (row x lists the products x*y for
// y = 0..n-1), optionally followed by a "# label" line. Index 0 must be
// the identity; the table is fully validated.
Group load_table_file(const std::string& path);

struct CatalogEntry {
  std::string spec;
  int order = 0;
};

// Canonical constructor specs for a given order. For orders 1..16 and 27
// the list provably contains every isomorphism type.
std::vector<CatalogEntry> catalog_specs(int order);
bool catalog_complete(int order);
// Known group counts for the complete orders (classification, hardcoded).
int catalog_expected_count(int order);

}  // namespace holocount

#endif  // HOLOCOUNT_CATALOG_HPP_
