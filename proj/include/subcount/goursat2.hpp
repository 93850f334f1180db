#ifndef SUBCOUNT_GOURSAT2_HPP
#define SUBCOUNT_GOURSAT2_HPP

#include <utility>
#include <vector>

#include "subcount/polynomial.hpp"
#include "subcount/types.hpp"

namespace subcount {

// One subgroup of Z_m x Z_n, parametrized by the tuple (a,b,c,d,l) with
//   a|m, b|a, c|n, d|c, a/b = c/d =: e, 1 <= l <= e, gcd(l,e) = 1.
// The subgroup is { (i*m/a, i*l*n/c + j*n/d mod n) : 0<=i<a, 0<=j<d } and has
// order a*d.
struct SubgroupDescriptor {
  u64 a = 1, b = 1, c = 1, d = 1, ell = 1;
  u64 m = 1, n = 1;  // ambient moduli

  u64 ratio() const { return a / b; }
  u64 order() const { return a * d; }
  bool valid() const;

  friend bool operator==(const SubgroupDescriptor&,
                         const SubgroupDescriptor&) = default;
};

// Invariant factors (first | second) of an abelian group of rank <= 2;
// (1,1) is the trivial group.
struct AbelianPair {
  u64 first = 1;
  u64 second = 1;

  friend bool operator==(const AbelianPair&, const AbelianPair&) = default;
};

// Exactly one descriptor per subgroup of Z_m x Z_n, sorted lexicographically
// by (a,b,c,d,l). List length equals count_rank2(m,n).
std::vector<SubgroupDescriptor> enumerate_descriptors(u64 m, u64 n);

// The element set of the described subgroup as sorted (mod m, mod n) pairs.
std::vector<std::pair<u64, u64>> descriptor_elements(
    const SubgroupDescriptor& desc);

// Invariant factor decomposition of the subgroup: (gcd(b,d), lcm(a,c)).
AbelianPair descriptor_invariants(const SubgroupDescriptor& desc);

// Invariant factor decomposition of the quotient (Z_m x Z_n) / K:
// (gcd(m/a, n/c), lcm(m/b, n/d)).
AbelianPair quotient_invariants(const SubgroupDescriptor& desc);

// Total number of subgroups of Z_m x Z_n: sum of gcd(i,j) over i|m, j|n.
Int count_rank2(u64 m, u64 n);

// Number of subgroups of order k: sum of phi(ij/k) over i|gcd(m,k),
// j|gcd(n,k) with k|ij. Throws std::invalid_argument unless k >= 1, k | m*n.
Int count_rank2_order(u64 m, u64 n, u64 k);

// Total subgroup count of Z_{p^a} x Z_{p^b} as a polynomial in p, 1 <= a <= b.
// Computed by the divisor sum and cross-checked against the closed form
// whose numerator is (b-a+1)p^(a+2) - (b-a-1)p^(a+1) - (a+b+3)p + (a+b+1)
// over (p-1)^2. Throws std::invalid_argument if a < 1 or a > b.
Polynomial poly_rank2(unsigned a, unsigned b);

// Subgroups of order p^c of Z_{p^a} x Z_{p^b} as a polynomial in p, computed
// by the phi-weighted divisor sum and cross-checked against the closed form
// (a truncated geometric series in each of the three ranges of c).
// Requires 1 <= a <= b and 0 <= c <= a+b.
Polynomial poly_rank2_order(unsigned a, unsigned b, unsigned c);

// Number of automorphisms of Z_m x Z_n (multiplicative in (m,n); per prime,
// with sorted exponents u <= v: phi(p^v) for u = 0, p^(2u) phi(p^u) phi(p^v)
// for u < v, and p^u phi_2(p^u) phi(p^u) for u = v).
Int aut_count(u64 m, u64 n);

}  // namespace subcount

#endif  // SUBCOUNT_GOURSAT2_HPP
