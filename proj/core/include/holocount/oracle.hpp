#ifndef HOLOCOUNT_ORACLE_HPP_
#define HOLOCOUNT_ORACLE_HPP_

#include "holocount/holomorph.hpp"

namespace holocount {

struct OracleReport {
  std::string method;
  int64_t oracleCount = 0;
  int64_t pipelineCount = 0;
  int64_t delta() const { return oracleCount - pipelineCount; }
};

// Every regular subgroup of Hol(N), each exactly once, as sorted code
// vectors. Independent of the crossed-homomorphism machinery: subgroups
// are grown by repeatedly adjoining the unique element whose translation
// part is the least uncovered one, branching over its automorphism part;
// a partial subgroup survives only while all non-identity elements act
// without fixed points. Cached per N. maxN guards runaway inputs (the
// default bound is 24; the quasisimple target alt:5 runs with 60).
const std::vector<std::vector<int32_t>>& regular_subgroups_hol(
    const std::shared_ptr<const Group>& n, int maxN = 24);

// #{regular subgroups of Hol(N) isomorphic to G}; must equal the
// subgroupCount of count_reg(G, N).
int64_t brute_reg_subgroups_hol(const std::shared_ptr<const Group>& n,
                                const Group& g, int maxN = 24);

// #{regular subgroups of Perm(G) normalized by lambda(G)} by direct search
// over fixed-point-free permutations; |G| <= 6 (8 behind the flag). Must
// equal the sum of e(G, N) over all isomorphism types N of order |G|.
int64_t brute_gp_count(const Group& g, bool allowOrder8 = false);

}  // namespace holocount

#endif  // HOLOCOUNT_ORACLE_HPP_
