#ifndef SUBCOUNT_NUMTH_HPP
#define SUBCOUNT_NUMTH_HPP

#include <array>
#include <functional>
#include <vector>

#include "subcount/types.hpp"

namespace subcount {

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime power factorization, primes strictly increasing, exponents >= 1.
// The empty list represents 1.
using Factorization = std::vector<PrimePower>;

// Trial division up to sqrt(n). Throws std::invalid_argument for n = 0.
Factorization factorize(u64 n);

// All divisors of n in ascending order; divisors(1) = {1}.
std::vector<u64> divisors(u64 n);

// Euler's totient. phi(1) = 1.
u64 euler_phi(u64 n);

// Jordan totient of order 2: phi_2(n) = n^2 * prod_{p|n} (1 - 1/p^2).
Int jordan_phi2(u64 n);

// Per-prime kernel of a multiplicative function of four variables:
// given p and the exponents of p in (m,n,r,s), return the prime-power value.
using PrimePowerKernel = std::function<Int(u64 p, const std::array<unsigned, 4>& e)>;

// Same with an extra exponent for the subgroup order k.
using PrimePowerOrderKernel =
    std::function<Int(u64 p, const std::array<unsigned, 4>& e, unsigned ek)>;

// Lifts a per-prime-power kernel to arbitrary (m,n,r,s): the product of
// kernel values over all primes dividing m*n*r*s. Empty product is 1.
Int multiplicative_lift4(const PrimePowerKernel& f, u64 m, u64 n, u64 r, u64 s);

// Order-k variant. Throws std::invalid_argument unless k >= 1 and k | m*n*r*s.
Int multiplicative_lift4(const PrimePowerOrderKernel& f, u64 m, u64 n, u64 r,
                         u64 s, const Int& k);

}  // namespace subcount

#endif  // SUBCOUNT_NUMTH_HPP
