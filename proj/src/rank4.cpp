#include "subcount/rank4.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "subcount/goursat2.hpp"
#include "subcount/numth.hpp"

namespace subcount {

namespace {

u64 pow_u64(u64 base, unsigned exp) {
  u64 out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

SideProfile side_profile(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("side_profile: moduli must be positive");
  SideProfile prof;
  // A = descriptor (x1*x3, x1, x4*x3, x4, .) of Z_m x Z_n contributes
  // phi(x3) choices; its invariant factors are g = gcd(x1,x4) and
  // l = x3*lcm(x1,x4). B ranges over descriptors of Z_g x Z_l the same way,
  // and the quotient A/B is Z_u x Z_v.
  for (u64 x3 : divisors(std::gcd(m, n))) {
    const u64 phi_x3 = euler_phi(x3);
    for (u64 x1 : divisors(m / x3)) {
      for (u64 x4 : divisors(n / x3)) {
        const u64 g = std::gcd(x1, x4);
        const u64 l = x3 * std::lcm(x1, x4);
        const u64 outer = x1 * x3 * x4;  // |A|
        for (u64 y3 : divisors(g)) {
          const Int weight = Int(phi_x3) * euler_phi(y3);
          for (u64 y1 : divisors(g / y3)) {
            const u64 y2 = g / y3 / y1;
            for (u64 y4 : divisors(l / y3)) {
              const u64 y5 = l / y3 / y4;
              prof[{std::gcd(y2, y5), y3 * std::lcm(y2, y5), outer,
                    y1 * y3 * y4}] += weight;
            }
          }
        }
      }
    }
  }
  return prof;
}

PolyProfile poly_side_profile(unsigned a, unsigned b) {
  PolyProfile prof;
  for (unsigned x3 = 0; x3 <= std::min(a, b); ++x3) {
    for (unsigned x1 = 0; x3 + x1 <= a; ++x1) {
      for (unsigned x4 = 0; x3 + x4 <= b; ++x4) {
        const unsigned g = std::min(x1, x4);
        const unsigned l = x3 + std::max(x1, x4);
        const unsigned outer = x1 + x3 + x4;
        for (unsigned y3 = 0; y3 <= g; ++y3) {
          const Polynomial weight = phi_poly(x3) * phi_poly(y3);
          for (unsigned y1 = 0; y3 + y1 <= g; ++y1) {
            const unsigned y2 = g - y3 - y1;
            for (unsigned y4 = 0; y3 + y4 <= l; ++y4) {
              const unsigned y5 = l - y3 - y4;
              prof[{std::min(y2, y5), y3 + std::max(y2, y5), outer,
                    y1 + y3 + y4}] += weight;
            }
          }
        }
      }
    }
  }
  return prof;
}

namespace {

// Collapse a profile onto its (u,v) keys.
std::map<std::pair<u64, u64>, Int> by_quotient(const SideProfile& prof) {
  std::map<std::pair<u64, u64>, Int> out;
  for (const auto& [key, w] : prof) out[{key.u, key.v}] += w;
  return out;
}

std::map<std::pair<unsigned, unsigned>, Polynomial> by_quotient(
    const PolyProfile& prof) {
  std::map<std::pair<unsigned, unsigned>, Polynomial> out;
  for (const auto& [key, w] : prof) out[{key.u, key.v}] += w;
  return out;
}

// Collapse onto ((u,v), order), keeping either the outer or the inner order.
std::map<std::pair<u64, u64>, std::map<u64, Int>> by_quotient_and_order(
    const SideProfile& prof, bool outer) {
  std::map<std::pair<u64, u64>, std::map<u64, Int>> out;
  for (const auto& [key, w] : prof)
    out[{key.u, key.v}][outer ? key.outer : key.inner] += w;
  return out;
}

std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Polynomial>>
by_quotient_and_order(const PolyProfile& prof, bool outer) {
  std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Polynomial>> out;
  for (const auto& [key, w] : prof)
    out[{key.u, key.v}][outer ? key.outer : key.inner] += w;
  return out;
}

}  // namespace

Int count_rank4(u64 m, u64 n, u64 r, u64 s) {
  if (m == 0 || n == 0 || r == 0 || s == 0)
    throw std::invalid_argument("count_rank4: arguments must be positive");
  const auto left = by_quotient(side_profile(m, n));
  const auto right = by_quotient(side_profile(r, s));
  Int total = 0;
  for (const auto& [uv, wl] : left) {
    const auto it = right.find(uv);
    if (it == right.end()) continue;
    total += wl * it->second * aut_count(uv.first, uv.second);
  }
  return total;
}

namespace detail {

Int paired_order_count(const SideProfile& left, const SideProfile& right,
                       const Int& k, bool swap_roles) {
  const auto la = by_quotient_and_order(left, /*outer=*/!swap_roles);
  const auto ra = by_quotient_and_order(right, /*outer=*/swap_roles);
  Int total = 0;
  for (const auto& [uv, lorders] : la) {
    const auto it = ra.find(uv);
    if (it == ra.end()) continue;
    Int matched = 0;
    for (const auto& [w_left, wl] : lorders) {
      if (!mpz_divisible_ui_p(k.get_mpz_t(), w_left)) continue;
      const Int q = k / w_left;
      if (!q.fits_ulong_p()) continue;
      const auto jt = it->second.find(q.get_ui());
      if (jt == it->second.end()) continue;
      matched += wl * jt->second;
    }
    if (matched != 0) total += matched * aut_count(uv.first, uv.second);
  }
  return total;
}

Polynomial paired_order_poly(const PolyProfile& left, const PolyProfile& right,
                             unsigned k, bool swap_roles) {
  const auto la = by_quotient_and_order(left, /*outer=*/!swap_roles);
  const auto ra = by_quotient_and_order(right, /*outer=*/swap_roles);
  Polynomial total;
  for (const auto& [uv, lorders] : la) {
    const auto it = ra.find(uv);
    if (it == ra.end()) continue;
    Polynomial matched;
    for (const auto& [w_left, wl] : lorders) {
      if (w_left > k) continue;
      const auto jt = it->second.find(k - w_left);
      if (jt == it->second.end()) continue;
      matched += wl * jt->second;
    }
    if (!matched.is_zero())
      total += matched * aut_poly(uv.first, uv.second);
  }
  return total;
}

}  // namespace detail

Int count_rank4_order(u64 m, u64 n, u64 r, u64 s, const Int& k) {
  if (m == 0 || n == 0 || r == 0 || s == 0)
    throw std::invalid_argument("count_rank4_order: arguments must be positive");
  const Int group_order = Int(m) * n * r * s;
  if (k < 1 || !mpz_divisible_p(group_order.get_mpz_t(), k.get_mpz_t()))
    throw std::invalid_argument("count_rank4_order: k must divide m*n*r*s");
  const SideProfile left = side_profile(m, n);
  const SideProfile right = side_profile(r, s);
  const Int total = detail::paired_order_count(left, right, k, false);
  // Grouping by the complementary pair of orders must count the same
  // subgroups; cross-check while the inputs are cheap.
  assert(group_order > 1024 ||
         total == detail::paired_order_count(left, right, k, true));
  return total;
}

Polynomial poly_rank4(unsigned a, unsigned b, unsigned c, unsigned d) {
  const auto left = by_quotient(poly_side_profile(a, b));
  const auto right = by_quotient(poly_side_profile(c, d));
  Polynomial total;
  for (const auto& [uv, wl] : left) {
    const auto it = right.find(uv);
    if (it == right.end()) continue;
    total += wl * it->second * aut_poly(uv.first, uv.second);
  }
  return total;
}

Polynomial poly_rank4_order(unsigned a, unsigned b, unsigned c, unsigned d,
                            unsigned k) {
  if (k > a + b + c + d)
    throw std::invalid_argument("poly_rank4_order: requires k <= a+b+c+d");
  const PolyProfile left = poly_side_profile(a, b);
  const PolyProfile right = poly_side_profile(c, d);
  const Polynomial total = detail::paired_order_poly(left, right, k, false);
  assert(a + b + c + d > 10 ||
         total == detail::paired_order_poly(left, right, k, true));
  return total;
}

Int count_via_primes(u64 m, u64 n, u64 r, u64 s) {
  return multiplicative_lift4(
      [](u64 p, const std::array<unsigned, 4>& e) {
        return count_rank4(pow_u64(p, e[0]), pow_u64(p, e[1]),
                           pow_u64(p, e[2]), pow_u64(p, e[3]));
      },
      m, n, r, s);
}

Int count_via_primes(u64 m, u64 n, u64 r, u64 s, const Int& k) {
  return multiplicative_lift4(
      [](u64 p, const std::array<unsigned, 4>& e, unsigned ek) {
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, ek);
        return count_rank4_order(pow_u64(p, e[0]), pow_u64(p, e[1]),
                                 pow_u64(p, e[2]), pow_u64(p, e[3]), pk);
      },
      m, n, r, s, k);
}

std::vector<std::pair<u64, Int>> table_N(u64 max_n) {
  if (max_n == 0) throw std::invalid_argument("table_N: max_n must be positive");
  std::vector<std::pair<u64, Int>> rows;
  rows.reserve(max_n);
  for (u64 n = 1; n <= max_n; ++n)
    rows.emplace_back(n, count_via_primes(n, n, n, n));
  return rows;
}

bool ConjectureReport::all_pass() const {
  return std::all_of(degree.begin(), degree.end(),
                     [](const DegreeFinding& f) { return f.pass; }) &&
         std::all_of(diagonal.begin(), diagonal.end(),
                     [](const DiagonalFinding& f) { return f.pass; });
}

ConjectureReport check_conjectures(unsigned max_exp) {
  if (max_exp == 0)
    throw std::invalid_argument("check_conjectures: max_exp must be positive");
  ConjectureReport report;
  for (unsigned a = 1; a <= max_exp; ++a)
    for (unsigned b = a; b <= max_exp; ++b)
      for (unsigned c = b; c <= max_exp; ++c)
        for (unsigned d = c; d <= max_exp; ++d) {
          const int deg = poly_rank4(a, b, c, d).degree();
          const int expected = static_cast<int>(2 * a + b + c);
          report.degree.push_back({a, b, c, d, deg, expected, deg == expected});
        }
  for (unsigned m = 1; m <= max_exp; ++m) {
    const Polynomial poly = poly_rank4(m, m, m, m);
    const int expected = static_cast<int>(4 * m);
    const bool pass = poly.degree() == expected && poly.leading_coeff() == 1;
    report.diagonal.push_back({m, poly.degree(), expected,
                               poly.leading_coeff(), pass});
  }
  return report;
}

SymmetryReport check_symmetry_unimodality(unsigned a, unsigned b, unsigned c,
                                          unsigned d) {
  const unsigned n = a + b + c + d;
  std::vector<Polynomial> by_order;
  by_order.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    by_order.push_back(poly_rank4_order(a, b, c, d, k));

  SymmetryReport report{a, b, c, d, true, true, -1};
  for (unsigned k = 0; k <= n; ++k) {
    if (by_order[k] != by_order[n - k]) {
      report.symmetric = false;
      report.first_violation_k = static_cast<int>(k);
      return report;
    }
  }
  for (unsigned k = 1; k <= n / 2; ++k) {
    const Polynomial diff = by_order[k] - by_order[k - 1];
    const bool nonneg = std::all_of(diff.coeffs().begin(), diff.coeffs().end(),
                                    [](const Int& x) { return x >= 0; });
    if (!nonneg) {
      report.unimodal = false;
      report.first_violation_k = static_cast<int>(k);
      return report;
    }
  }
  return report;
}

}  // namespace subcount
