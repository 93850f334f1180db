#include "subcount/numth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subcount {

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (u64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  u64 result = 1;
  for (const auto& [p, e] : factorize(n)) {
    u64 pe1 = 1;  // p^(e-1)
    for (unsigned i = 1; i < e; ++i) pe1 *= p;
    result *= pe1 * (p - 1);
  }
  return result;
}

Int jordan_phi2(u64 n) {
  if (n == 0) throw std::invalid_argument("jordan_phi2: n must be positive");
  // phi_2(n) = prod p^(2e-2) * (p^2 - 1)
  Int result = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int pp(p);
    Int term = pp * pp - 1;
    for (unsigned i = 1; i < e; ++i) term *= pp * pp;
    result *= term;
  }
  return result;
}

namespace {

// Exponents of every prime dividing m*n*r*s, keyed by prime.
std::map<u64, std::array<unsigned, 4>> joint_exponents(u64 m, u64 n, u64 r,
                                                       u64 s) {
  std::map<u64, std::array<unsigned, 4>> exps;
  const u64 args[4] = {m, n, r, s};
  for (int i = 0; i < 4; ++i) {
    for (const auto& [p, e] : factorize(args[i])) exps[p][i] = e;
  }
  return exps;
}

}  // namespace

Int multiplicative_lift4(const PrimePowerKernel& f, u64 m, u64 n, u64 r,
                         u64 s) {
  if (m == 0 || n == 0 || r == 0 || s == 0)
    throw std::invalid_argument("multiplicative_lift4: arguments must be positive");
  Int result = 1;
  for (const auto& [p, e] : joint_exponents(m, n, r, s)) result *= f(p, e);
  return result;
}

Int multiplicative_lift4(const PrimePowerOrderKernel& f, u64 m, u64 n, u64 r,
                         u64 s, const Int& k) {
  if (m == 0 || n == 0 || r == 0 || s == 0)
    throw std::invalid_argument("multiplicative_lift4: arguments must be positive");
  if (k < 1) throw std::invalid_argument("multiplicative_lift4: k must be positive");
  Int result = 1;
  Int rest = k;
  for (const auto& [p, e] : joint_exponents(m, n, r, s)) {
    const unsigned ek =
        static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                         Int(p).get_mpz_t()));
    if (ek > e[0] + e[1] + e[2] + e[3])
      throw std::invalid_argument("multiplicative_lift4: k does not divide mnrs");
    result *= f(p, e, ek);
  }
  // Any prime left in k does not divide mnrs.
  if (rest != 1)
    throw std::invalid_argument("multiplicative_lift4: k does not divide mnrs");
  return result;
}

}  // namespace subcount
