#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "subcount/numth.hpp"
#include "subcount/polynomial.hpp"

using namespace subcount;

namespace {

Polynomial make(std::initializer_list<long> ascending) {
  std::vector<Int> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg_dist(0, 8);
  std::uniform_int_distribution<long> coeff_dist(-50, 50);
  std::vector<Int> c(deg_dist(rng) + 1);
  for (auto& x : c) x = coeff_dist(rng);
  return Polynomial(std::move(c));
}

// Automorphisms of Z_a x Z_b counted the slow way: an endomorphism is a pair
// of images (x, y) for the generators with a*x = 0 and b*y = 0; count the
// bijective ones.
u64 brute_force_aut_count(u64 a, u64 b) {
  const u64 order = a * b;
  auto kills = [&](u64 t, u64 x1, u64 x2) {
    return (t * x1) % a == 0 && (t * x2) % b == 0;
  };
  u64 autos = 0;
  for (u64 x1 = 0; x1 < a; ++x1)
    for (u64 x2 = 0; x2 < b; ++x2) {
      if (!kills(a, x1, x2)) continue;
      for (u64 y1 = 0; y1 < a; ++y1)
        for (u64 y2 = 0; y2 < b; ++y2) {
          if (!kills(b, y1, y2)) continue;
          std::vector<char> hit(order, 0);
          u64 distinct = 0;
          for (u64 i = 0; i < a; ++i)
            for (u64 j = 0; j < b; ++j) {
              const u64 im1 = (i * x1 + j * y1) % a;
              const u64 im2 = (i * x2 + j * y2) % b;
              if (!hit[im1 * b + im2]) {
                hit[im1 * b + im2] = 1;
                ++distinct;
              }
            }
          if (distinct == order) ++autos;
        }
    }
  return autos;
}

}  // namespace

TEST_CASE("addition identities") {
  const Polynomial one_plus_p = make({1, 1});
  CHECK(one_plus_p + Polynomial() == one_plus_p);
  CHECK(one_plus_p + make({-1, -1}) == Polynomial());
  CHECK(make({5, 3}) + make({0, 0, 1}) == make({5, 3, 1}));
}

TEST_CASE("multiplication") {
  const Polynomial one_plus_p = make({1, 1});
  CHECK(one_plus_p * Polynomial(1) == one_plus_p);
  CHECK(one_plus_p * make({1, -1}) == make({1, 0, -1}));
  // (p-1)^2 (p+3) = p^3 + p^2 - 5p + 3
  const Polynomial pm1 = make({-1, 1});
  CHECK(pm1 * pm1 * make({3, 1}) == make({3, -5, 1, 1}));
}

TEST_CASE("degree and normalization") {
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial(0).is_zero());
  CHECK(Polynomial(7).degree() == 0);
  CHECK(make({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial::monomial(0, 5).is_zero());
  CHECK(Polynomial::monomial(1, 5).degree() == 5);
}

TEST_CASE("evaluation") {
  const Polynomial f = make({5, 3, 4, 3, 1});
  CHECK(f.eval(2) == 67);
  CHECK(f.eval(3) == 212);
  CHECK(Polynomial().eval(7) == 0);
}

TEST_CASE("ring axioms and eval homomorphism on a random corpus") {
  std::mt19937 rng(20160405);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial f = random_poly(rng);
    const Polynomial g = random_poly(rng);
    const Polynomial h = random_poly(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    for (long x : {2L, 3L, 5L}) {
      CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
      CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
    }
  }
}

TEST_CASE("phi_poly") {
  CHECK(phi_poly(0) == Polynomial(1));
  CHECK(phi_poly(1) == make({-1, 1}));
  CHECK(phi_poly(3) == make({0, 0, -1, 1}));
  for (u64 p : {2, 3, 5, 7})
    for (unsigned x = 0; x <= 6; ++x) {
      u64 px = 1;
      for (unsigned i = 0; i < x; ++i) px *= p;
      CHECK(phi_poly(x).eval(Int(p)) == euler_phi(px));
    }
}

TEST_CASE("aut_poly transcribed cases") {
  CHECK(aut_poly(0, 0) == Polynomial(1));
  CHECK(aut_poly(1, 1) == make({0, 1, -1, -1, 1}));
  CHECK(aut_poly(1, 1).eval(2) == 6);
  CHECK(aut_poly(1, 2) == make({0, 0, 0, 1, -2, 1}));
  CHECK(aut_poly(1, 2).eval(2) == 8);
  CHECK(aut_poly(0, 3) == phi_poly(3));
  CHECK_THROWS_AS(aut_poly(2, 1), std::invalid_argument);
}

TEST_CASE("aut_poly matches brute-force automorphism counts") {
  for (u64 p : {2, 3})
    for (unsigned u = 0; u <= 2; ++u)
      for (unsigned v = u; v <= 2; ++v) {
        u64 pu = 1, pv = 1;
        for (unsigned i = 0; i < u; ++i) pu *= p;
        for (unsigned i = 0; i < v; ++i) pv *= p;
        CHECK(aut_poly(u, v).eval(Int(p)) == brute_force_aut_count(pu, pv));
      }
}

TEST_CASE("rendering") {
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(1).to_string() == "1");
  CHECK(Polynomial(-3).to_string() == "-3");
  CHECK(make({5, 3, 4, 3, 1}).to_string() == "p^4 + 3*p^3 + 4*p^2 + 3*p + 5");
  CHECK(make({0, 1}).to_string() == "p");
  CHECK(make({0, 2}).to_string() == "2*p");
  CHECK(make({0, 0, -1, 1}).to_string() == "p^3 - p^2");
  CHECK(make({1, 0, 5}).to_string() == "5*p^2 + 1");
}
