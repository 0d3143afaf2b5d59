#include "eorb/polynomial.hpp"

#include <sstream>

namespace eorb::epoly {

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  add_term({0, 0}, constant);
}

BivariatePolynomial BivariatePolynomial::monomial(int p, int q, const Rational& coeff) {
  if (p < 0 || q < 0) throw Error("negative exponent in monomial");
  BivariatePolynomial r;
  r.add_term({p, q}, coeff);
  return r;
}

void BivariatePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();  // callers may pass an uncanonicalized num/den
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BivariatePolynomial::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BivariatePolynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

BivariatePolynomial::Exponent BivariatePolynomial::leading_exponent() const {
  if (terms_.empty()) throw Error("leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
  BivariatePolynomial result(1);
  BivariatePolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::substitute_power(int k) const {
  if (k < 1) throw Error("substitute_power: exponent must be positive");
  BivariatePolynomial r;
  for (const auto& [e, c] : terms_) r.add_term({e.first * k, e.second * k}, c);
  return r;
}

Rational BivariatePolynomial::evaluate(const Rational& u, const Rational& v) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < e.first; ++i) term *= u;
    for (int i = 0; i < e.second; ++i) term *= v;
    total += term;
  }
  return total;
}

BivariatePolynomial exact_divide(const BivariatePolynomial& dividend,
                                 const BivariatePolynomial& divisor) {
  if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
  const auto [dp, dq] = divisor.leading_exponent();
  const Rational dc = divisor.coefficient(dp, dq);
  BivariatePolynomial rest = dividend;
  BivariatePolynomial quotient;
  while (!rest.is_zero()) {
    const auto [rp, rq] = rest.leading_exponent();
    if (rp < dp || rq < dq)
      throw InexactDivision("polynomial " + to_text(dividend) + " is not divisible by " +
                            to_text(divisor));
    const auto step = BivariatePolynomial::monomial(rp - dp, rq - dq, rest.coefficient(rp, rq) / dc);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::string coefficient_string(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_coefficient(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw Error("bad rational coefficient '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_text(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*u^" << e.first << "*v^" << e.second;
  }
  return os.str();
}

namespace {

int parse_exponent(const std::string& s, const std::string& term) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("bad exponent in monomial '" + term + "'");
  return std::stoi(s);
}

}  // namespace

BivariatePolynomial parse_text(const std::string& text) {
  BivariatePolynomial p;
  if (text == "0") return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    const std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    const auto star_u = term.find("*u^");
    const auto star_v = term.find("*v^");
    if (star_u == std::string::npos || star_v == std::string::npos || star_v < star_u)
      throw Error("bad monomial '" + term + "'");
    const Rational c = parse_coefficient(term.substr(0, star_u));
    const int du = parse_exponent(term.substr(star_u + 3, star_v - star_u - 3), term);
    const int dv = parse_exponent(term.substr(star_v + 3), term);
    p += BivariatePolynomial::monomial(du, dv, c);
    if (end == std::string::npos) break;
    pos = end + 3;
  }
  return p;
}

}  // namespace eorb::epoly
