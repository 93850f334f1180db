#ifndef SUBCOUNT_POLYNOMIAL_HPP
#define SUBCOUNT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "subcount/types.hpp"

namespace subcount {

// Dense univariate polynomial in the indeterminate p with exact integer
// coefficients. Always normalized: no trailing zero coefficients, so equality
// is structural. The zero polynomial has an empty coefficient list and
// degree() == kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;  // stands in for degree -infinity

  Polynomial() = default;
  // Implicit lift of constants, so code can mix integers and polynomials.
  Polynomial(const Int& constant);
  Polynomial(long constant) : Polynomial(Int(constant)) {}
  explicit Polynomial(std::vector<Int> coeffs);

  // coeff * p^exp
  static Polynomial monomial(const Int& coeff, unsigned exp);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Ascending coefficients, index i holds the coefficient of p^i.
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
  }
  Int leading_coeff() const { return is_zero() ? Int(0) : coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Exact evaluation at x by Horner's scheme.
  Int eval(const Int& x) const;

  // Descending-power rendering, e.g. "p^4 + 3*p^3 + 4*p^2 + 3*p + 5".
  // Zero terms are omitted, unit coefficients are implicit except for the
  // constant term; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Int> coeffs_;
};

// phi(p^x) as a polynomial in p: 1 for x = 0, p^x - p^(x-1) for x >= 1.
Polynomial phi_poly(unsigned x);

// Number of automorphisms of Z_{p^u} x Z_{p^v} as a polynomial in p,
// for sorted exponents u <= v:
//   u = v = 0      -> 1
//   0 = u < v      -> p^v - p^(v-1)
//   1 <= u < v     -> p^(3u+v) - 2 p^(3u+v-1) + p^(3u+v-2)
//   1 <= u = v     -> p^(4u) - p^(4u-1) - p^(4u-2) + p^(4u-3)
// Throws std::invalid_argument if u > v; callers sort (the function is
// symmetric since Z_{p^u} x Z_{p^v} and Z_{p^v} x Z_{p^u} are isomorphic).
Polynomial aut_poly(unsigned u, unsigned v);

}  // namespace subcount

#endif  // SUBCOUNT_POLYNOMIAL_HPP
