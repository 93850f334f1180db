#ifndef SUBCOUNT_RANK4_HPP
#define SUBCOUNT_RANK4_HPP

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "subcount/polynomial.hpp"
#include "subcount/types.hpp"

namespace subcount {

// Counting subgroups K of (Z_m x Z_n) x (Z_r x Z_s) splits into two halves:
// pairs B <= A <= Z_m x Z_n on the left, pairs D <= C <= Z_r x Z_s on the
// right, glued by an isomorphism A/B ~ C/D. A side profile aggregates one
// half: it maps
//   (u, v, outer, inner) -> weight
// where Z_u x Z_v is the invariant factor decomposition of the quotient
// (u | v), outer = |A|, inner = |B|, and the weight counts the descriptor
// tuples realizing that key (each pair of descriptor families contributes a
// product of two totient factors).
struct ProfileKey {
  u64 u = 1;
  u64 v = 1;
  u64 outer = 1;
  u64 inner = 1;

  auto operator<=>(const ProfileKey&) const = default;
};

using SideProfile = std::map<ProfileKey, Int>;

// Exponent-level analogue for prime-power arguments: every entry of the key
// is the exponent of p, weights are polynomials in p.
struct ExpProfileKey {
  unsigned u = 0;
  unsigned v = 0;
  unsigned outer = 0;
  unsigned inner = 0;

  auto operator<=>(const ExpProfileKey&) const = default;
};

using PolyProfile = std::map<ExpProfileKey, Polynomial>;

// Profile of one side Z_m x Z_n. Deterministic; pure.
SideProfile side_profile(u64 m, u64 n);

// Profile of one side Z_{p^a} x Z_{p^b} with polynomial weights.
PolyProfile poly_side_profile(unsigned a, unsigned b);

// Total number of subgroups of Z_m x Z_n x Z_r x Z_s, computed by pairing
// side_profile(m,n) with side_profile(r,s) over matching (u,v) keys, weighted
// by the automorphism count of Z_u x Z_v.
Int count_rank4(u64 m, u64 n, u64 r, u64 s);

// Number of subgroups of order k. The order of a glued subgroup is
// outer_left * inner_right, so the pairing additionally matches that product
// against k. Throws std::invalid_argument unless k >= 1 and k | m*n*r*s.
Int count_rank4_order(u64 m, u64 n, u64 r, u64 s, const Int& k);

// Total subgroup count of Z_{p^a} x Z_{p^b} x Z_{p^c} x Z_{p^d} as a
// polynomial in p.
Polynomial poly_rank4(unsigned a, unsigned b, unsigned c, unsigned d);

// Subgroups of order p^k, as a polynomial in p. Requires 0 <= k <= a+b+c+d.
Polynomial poly_rank4_order(unsigned a, unsigned b, unsigned c, unsigned d,
                            unsigned k);

// Same counts computed per prime component and multiplied back together.
Int count_via_primes(u64 m, u64 n, u64 r, u64 s);
Int count_via_primes(u64 m, u64 n, u64 r, u64 s, const Int& k);

// Rows (n, N(Z_n^4)) for n = 1..max_n, computed via count_via_primes.
std::vector<std::pair<u64, Int>> table_N(u64 max_n);

// --- empirical scanners -----------------------------------------------------

struct DegreeFinding {
  unsigned a, b, c, d;
  int degree;
  int expected;  // 2a+b+c for sorted exponents
  bool pass;
};

struct DiagonalFinding {
  unsigned m;
  int degree;
  int expected;  // 4m
  Int leading;   // expected 1
  bool pass;
};

struct ConjectureReport {
  std::vector<DegreeFinding> degree;      // over all 1 <= a <= b <= c <= d <= max_exp
  std::vector<DiagonalFinding> diagonal;  // over all 1 <= m <= max_exp
  bool all_pass() const;
};

// Scans the degree conjectures over the given exponent range. Purely
// empirical: reports pass/fail per tuple, claims nothing beyond the range.
ConjectureReport check_conjectures(unsigned max_exp);

struct SymmetryReport {
  unsigned a, b, c, d;
  bool symmetric;         // order-k and order-(n-k) polynomials agree, n = a+b+c+d
  bool unimodal;          // successive differences have nonnegative
                          // coefficients up to k = floor(n/2)
  int first_violation_k;  // -1 when both properties hold
};

SymmetryReport check_symmetry_unimodality(unsigned a, unsigned b, unsigned c,
                                          unsigned d);

namespace detail {

// Order-constrained pairing of two side profiles. The production route keys
// the left profile by outer order and the right by inner order; with
// swap_roles the left is keyed by inner and the right by outer. The two
// routes count the same subgroups and must agree.
Int paired_order_count(const SideProfile& left, const SideProfile& right,
                       const Int& k, bool swap_roles);

Polynomial paired_order_poly(const PolyProfile& left, const PolyProfile& right,
                             unsigned k, bool swap_roles);

}  // namespace detail

}  // namespace subcount

#endif  // SUBCOUNT_RANK4_HPP
