#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "subcount/numth.hpp"
#include "subcount/rank4.hpp"

using namespace subcount;

namespace {

u64 reconstruct(const Factorization& f) {
  u64 n = 1;
  for (const auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

// Independent totient: count residues coprime to n directly.
u64 phi_by_counting(u64 n) {
  u64 count = 0;
  for (u64 l = 1; l <= n; ++l)
    if (std::gcd(l, n) == 1) ++count;
  return count;
}

// Independent Jordan totient of order 2: count coprime pairs mod n.
u64 phi2_by_counting(u64 n) {
  u64 count = 0;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y)
      if (std::gcd(std::gcd(x, y), n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("factorize basics") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(30) == Factorization{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize round-trips and divisor counts up to 10^4") {
  for (u64 n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    CHECK(reconstruct(f) == n);
    u64 expected_divisors = 1;
    u64 last_prime = 0;
    for (const auto& [p, e] : f) {
      CHECK(p > last_prime);
      CHECK(e >= 1);
      last_prime = p;
      expected_divisors *= e + 1;
    }
    CHECK(divisors(n).size() == expected_divisors);
  }
}

TEST_CASE("divisors basics") {
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(divisors(6) == std::vector<u64>{1, 2, 3, 6});
  CHECK(divisors(16) == std::vector<u64>{1, 2, 4, 8, 16});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);

  const auto d = divisors(360);
  CHECK(d.front() == 1);
  CHECK(d.back() == 360);
  CHECK(std::is_sorted(d.begin(), d.end()));
  for (u64 x : d) CHECK(360 % x == 0);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == phi_by_counting(8));
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == phi_by_counting(12));
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);

  for (u64 n = 1; n <= 300; ++n) CHECK(euler_phi(n) == phi_by_counting(n));
}

TEST_CASE("euler_phi is multiplicative on coprime arguments") {
  for (u64 a = 1; a <= 200; ++a)
    for (u64 b = 1; b <= 200; ++b)
      if (std::gcd(a, b) == 1)
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
}

TEST_CASE("totient divisor sum: sum of phi(d) over d|n equals n") {
  for (u64 n = 1; n <= 10000; ++n) {
    u64 sum = 0;
    for (u64 d : divisors(n)) sum += euler_phi(d);
    CHECK(sum == n);
  }
}

TEST_CASE("jordan_phi2") {
  CHECK(jordan_phi2(1) == 1);
  CHECK(jordan_phi2(4) == 12);
  CHECK(jordan_phi2(4) == phi2_by_counting(4));
  CHECK(jordan_phi2(6) == 24);
  CHECK(jordan_phi2(6) == phi2_by_counting(6));
  CHECK_THROWS_AS(jordan_phi2(0), std::invalid_argument);

  for (u64 n = 1; n <= 40; ++n) CHECK(jordan_phi2(n) == phi2_by_counting(n));
}

TEST_CASE("multiplicative_lift4 mechanics with a synthetic kernel") {
  // Kernel p^(e1+e2+e3+e4) lifts to the plain product m*n*r*s.
  const PrimePowerKernel product_kernel =
      [](u64 p, const std::array<unsigned, 4>& e) {
        Int out;
        mpz_ui_pow_ui(out.get_mpz_t(), p, e[0] + e[1] + e[2] + e[3]);
        return out;
      };
  for (u64 m : {1, 2, 6, 12})
    for (u64 n : {1, 5, 9})
      CHECK(multiplicative_lift4(product_kernel, m, n, 4, 7) ==
            Int(m) * n * 4 * 7);
  CHECK(multiplicative_lift4(product_kernel, 1, 1, 1, 1) == 1);
}

TEST_CASE("multiplicative_lift4 with the subgroup-count kernels") {
  const PrimePowerKernel total_kernel =
      [](u64 p, const std::array<unsigned, 4>& e) {
        auto pw = [p](unsigned x) {
          u64 out = 1;
          while (x--) out *= p;
          return out;
        };
        return count_rank4(pw(e[0]), pw(e[1]), pw(e[2]), pw(e[3]));
      };
  CHECK(multiplicative_lift4(total_kernel, 6, 6, 6, 6) == 14204);
  CHECK(multiplicative_lift4(total_kernel, 1, 1, 1, 1) == 1);

  const PrimePowerOrderKernel order_kernel =
      [](u64 p, const std::array<unsigned, 4>& e, unsigned ek) {
        auto pw = [p](unsigned x) {
          u64 out = 1;
          while (x--) out *= p;
          return out;
        };
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, ek);
        return count_rank4_order(pw(e[0]), pw(e[1]), pw(e[2]), pw(e[3]), pk);
      };
  CHECK(multiplicative_lift4(order_kernel, 2, 2, 2, 2, Int(4)) == 35);
  CHECK_THROWS_AS(multiplicative_lift4(order_kernel, 2, 2, 2, 2, Int(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicative_lift4(order_kernel, 2, 2, 2, 2, Int(32)),
                  std::invalid_argument);
}
