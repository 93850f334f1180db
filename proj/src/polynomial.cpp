#include "subcount/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace subcount {

Polynomial::Polynomial(const Int& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(const Int& coeff, unsigned exp) {
  if (coeff == 0) return {};
  Polynomial out;
  out.coeffs_.assign(exp + 1, Int(0));
  out.coeffs_[exp] = coeff;
  return out;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  Polynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  out.normalize();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Int Polynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Int abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << abs_c.get_str();
    } else {
      if (abs_c != 1) out << abs_c.get_str() << "*";
      out << "p";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Polynomial phi_poly(unsigned x) {
  if (x == 0) return Polynomial(1);
  return Polynomial::monomial(1, x) - Polynomial::monomial(1, x - 1);
}

Polynomial aut_poly(unsigned u, unsigned v) {
  if (u > v) throw std::invalid_argument("aut_poly: requires u <= v");
  if (v == 0) return Polynomial(1);
  if (u == 0) return phi_poly(v);
  if (u < v) {
    const unsigned d = 3 * u + v;
    return Polynomial::monomial(1, d) - Polynomial::monomial(2, d - 1) +
           Polynomial::monomial(1, d - 2);
  }
  const unsigned d = 4 * u;
  return Polynomial::monomial(1, d) - Polynomial::monomial(1, d - 1) -
         Polynomial::monomial(1, d - 2) + Polynomial::monomial(1, d - 3);
}

}  // namespace subcount
