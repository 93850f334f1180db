#ifndef SUBCOUNT_ORACLE_HPP
#define SUBCOUNT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "subcount/goursat2.hpp"
#include "subcount/types.hpp"

namespace subcount {

// Direct product of cyclic groups of the given orders.
struct FiniteAbelianGroup {
  std::vector<u64> moduli;

  u64 order() const;
};

// Exact census of the subgroups of a small group.
struct SubgroupCensus {
  std::map<u64, u64> by_order;
  u64 total = 0;
};

inline constexpr u64 kDefaultOrderBound = 256;

// Enumerates every subgroup by breadth-first closure: starting from the
// trivial subgroup, adjoin one missing element at a time and close, keeping
// canonical element sets for deduplication. Every produced set is re-verified
// to be closed under the group operation. Throws resource_limit_error when
// the group order exceeds the bound.
SubgroupCensus enumerate_subgroups(const FiniteAbelianGroup& group,
                                   u64 order_bound = kDefaultOrderBound);

// Smith normal form diagonal of an integer matrix: nonnegative entries with
// d1 | d2 | ... The matrix must have at least one row and one column.
std::vector<std::int64_t> smith_normal_form(
    std::vector<std::vector<std::int64_t>> mat);

// Invariant factors of (Z_m x Z_n) / K for a descriptor K, read off the Smith
// normal form of the quotient's relation matrix (the rows are K's two
// generators plus (m,0) and (0,n)).
AbelianPair quotient_structure_oracle(const SubgroupDescriptor& desc);

// Invariant factors of the subgroup K itself: K is the image of Z^2 under
// (i,j) -> i*k1 + j*k2 for its two generators, so K = Z^2 / L for the lattice
// L of exponent pairs mapping to zero. L is found by exhaustive search over a
// box, then reduced by Smith normal form. Intended for small m, n; throws
// resource_limit_error when lcm(m,n) exceeds the bound.
AbelianPair subgroup_structure_oracle(const SubgroupDescriptor& desc,
                                      u64 lcm_bound = kDefaultOrderBound);

}  // namespace subcount

#endif  // SUBCOUNT_ORACLE_HPP
