#include "subcount/goursat2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "subcount/numth.hpp"

namespace subcount {

bool SubgroupDescriptor::valid() const {
  if (a == 0 || b == 0 || c == 0 || d == 0 || ell == 0 || m == 0 || n == 0)
    return false;
  if (m % a != 0 || a % b != 0 || n % c != 0 || c % d != 0) return false;
  if (a / b != c / d) return false;
  const u64 e = a / b;
  return ell <= e && std::gcd(ell, e) == 1;
}

std::vector<SubgroupDescriptor> enumerate_descriptors(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("enumerate_descriptors: moduli must be positive");
  std::vector<SubgroupDescriptor> out;
  // Loop shape makes the a/b = c/d constraint structural: pick b, the common
  // ratio e with b*e | m, then d with d*e | n; a = b*e and c = d*e follow.
  for (u64 b : divisors(m)) {
    for (u64 e : divisors(m / b)) {
      for (u64 d : divisors(n)) {
        if ((n / d) % e != 0) continue;
        for (u64 ell = 1; ell <= e; ++ell) {
          if (std::gcd(ell, e) != 1) continue;
          out.push_back({b * e, b, d * e, d, ell, m, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b, x.c, x.d, x.ell) <
           std::tie(y.a, y.b, y.c, y.d, y.ell);
  });
  return out;
}

std::vector<std::pair<u64, u64>> descriptor_elements(
    const SubgroupDescriptor& desc) {
  if (!desc.valid())
    throw std::invalid_argument("descriptor_elements: invalid descriptor");
  std::vector<std::pair<u64, u64>> elems;
  elems.reserve(desc.a * desc.d);
  for (u64 i = 0; i < desc.a; ++i) {
    const u64 x = i * (desc.m / desc.a) % desc.m;
    const u64 base = i * desc.ell % desc.n * (desc.n / desc.c) % desc.n;
    for (u64 j = 0; j < desc.d; ++j) {
      elems.emplace_back(x, (base + j * (desc.n / desc.d)) % desc.n);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

AbelianPair descriptor_invariants(const SubgroupDescriptor& desc) {
  if (!desc.valid())
    throw std::invalid_argument("descriptor_invariants: invalid descriptor");
  return {std::gcd(desc.b, desc.d), std::lcm(desc.a, desc.c)};
}

AbelianPair quotient_invariants(const SubgroupDescriptor& desc) {
  if (!desc.valid())
    throw std::invalid_argument("quotient_invariants: invalid descriptor");
  return {std::gcd(desc.m / desc.a, desc.n / desc.c),
          std::lcm(desc.m / desc.b, desc.n / desc.d)};
}

Int count_rank2(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("count_rank2: moduli must be positive");
  Int total = 0;
  for (u64 i : divisors(m))
    for (u64 j : divisors(n)) total += std::gcd(i, j);
  return total;
}

Int count_rank2_order(u64 m, u64 n, u64 k) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("count_rank2_order: moduli must be positive");
  if (k == 0 || (m * n) % k != 0)
    throw std::invalid_argument("count_rank2_order: k must divide m*n");
  Int total = 0;
  for (u64 i : divisors(std::gcd(m, k))) {
    for (u64 j : divisors(std::gcd(n, k))) {
      if ((i * j) % k != 0) continue;
      total += euler_phi(i * j / k);
    }
  }
  return total;
}

namespace {

// 1 + p + ... + p^c
Polynomial geometric_poly(unsigned c) {
  std::vector<Int> ones(c + 1, Int(1));
  return Polynomial(std::move(ones));
}

}  // namespace

Polynomial poly_rank2(unsigned a, unsigned b) {
  if (a < 1 || a > b)
    throw std::invalid_argument("poly_rank2: requires 1 <= a <= b");
  // Divisor-sum route: sum over 0<=i<=a, 0<=j<=b of p^min(i,j).
  Polynomial sum;
  for (unsigned i = 0; i <= a; ++i)
    for (unsigned j = 0; j <= b; ++j)
      sum += Polynomial::monomial(1, std::min(i, j));

  // Cross-check against the closed form, cleared of its (p-1)^2 denominator.
  const long ba = static_cast<long>(b) - static_cast<long>(a);
  const long ab = static_cast<long>(a) + static_cast<long>(b);
  Polynomial numerator = Polynomial::monomial(ba + 1, a + 2) -
                         Polynomial::monomial(ba - 1, a + 1) -
                         Polynomial::monomial(ab + 3, 1) + Polynomial(ab + 1);
  const Polynomial pm1 = Polynomial::monomial(1, 1) - Polynomial(1);
  if (sum * pm1 * pm1 != numerator)
    throw std::logic_error("poly_rank2: divisor sum disagrees with closed form");
  return sum;
}

Polynomial poly_rank2_order(unsigned a, unsigned b, unsigned c) {
  if (a < 1 || a > b)
    throw std::invalid_argument("poly_rank2_order: requires 1 <= a <= b");
  if (c > a + b)
    throw std::invalid_argument("poly_rank2_order: requires c <= a+b");
  // Divisor-sum route: i = p^alpha | gcd(p^a,p^c), j = p^beta | gcd(p^b,p^c),
  // p^c | ij, weight phi(ij / p^c).
  Polynomial sum;
  for (unsigned alpha = 0; alpha <= std::min(a, c); ++alpha)
    for (unsigned beta = 0; beta <= std::min(b, c); ++beta)
      if (alpha + beta >= c) sum += phi_poly(alpha + beta - c);

  const unsigned closed_deg = c <= a ? c : (c <= b ? a : a + b - c);
  if (sum != geometric_poly(closed_deg))
    throw std::logic_error(
        "poly_rank2_order: divisor sum disagrees with closed form");
  return sum;
}

Int aut_count(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("aut_count: moduli must be positive");
  const PrimePowerKernel per_prime = [](u64 p, const std::array<unsigned, 4>& e) {
    const auto [u, v] = std::minmax(e[0], e[1]);
    auto pow_p = [p](unsigned x) {
      Int out;
      mpz_ui_pow_ui(out.get_mpz_t(), p, x);
      return out;
    };
    auto phi_pp = [&](unsigned x) {
      return x == 0 ? Int(1) : Int(pow_p(x) - pow_p(x - 1));
    };
    if (u == v) {
      // p^u * phi_2(p^u) * phi(p^u); phi_2(p^u) = p^(2u-2) (p^2 - 1)
      if (u == 0) return Int(1);
      return Int(pow_p(u) * (pow_p(2 * u - 2) * (Int(p) * p - 1)) * phi_pp(u));
    }
    return Int(pow_p(2 * u) * phi_pp(u) * phi_pp(v));
  };
  return multiplicative_lift4(per_prime, m, n, 1, 1);
}

}  // namespace subcount
