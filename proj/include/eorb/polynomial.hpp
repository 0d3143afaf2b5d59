#pragma once

#include <map>
#include <string>
#include <utility>

#include "eorb/matrix.hpp"

namespace eorb::epoly {

class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial in u, v with rational coefficients. Zero coefficients are
/// never stored; iteration is in increasing (deg_u, deg_v) order.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);  // NOLINT: implicit scalars read naturally

  static BivariatePolynomial monomial(int p, int q, const Rational& coeff = 1);
  static BivariatePolynomial u() { return monomial(1, 0); }
  static BivariatePolynomial v() { return monomial(0, 1); }
  static BivariatePolynomial uv() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(int p, int q) const;
  bool is_zero() const { return terms_.empty(); }
  bool has_integer_coefficients() const;

  /// Largest exponent in lexicographic (deg_u, deg_v) order; zero polynomial has none.
  Exponent leading_exponent() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Rational& s);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a) { return a *= Rational(-1); }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  BivariatePolynomial pow(unsigned k) const;

  /// p(u^k, v^k).
  BivariatePolynomial substitute_power(int k) const;

  Rational evaluate(const Rational& u, const Rational& v) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

using Polynomial = BivariatePolynomial;

/// r with r * divisor == dividend; throws InexactDivision otherwise.
BivariatePolynomial exact_divide(const BivariatePolynomial& dividend,
                                 const BivariatePolynomial& divisor);

/// Monomials in sorted order as `c*u^p*v^q` joined by " + "; "0" for zero.
std::string to_text(const BivariatePolynomial& p);
BivariatePolynomial parse_text(const std::string& text);

/// Rational as "num/den" (den >= 1, always present).
std::string coefficient_string(const Rational& c);
Rational parse_coefficient(const std::string& s);

}  // namespace eorb::epoly
