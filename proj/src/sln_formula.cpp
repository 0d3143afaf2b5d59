#include "eorb/sln_formula.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eorb::sln {

using epoly::BivariatePolynomial;

Partition::Partition(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  if (mult_.empty()) mult_.push_back(0);
  mult_[0] = 0;
  while (mult_.size() > 1 && mult_.back() == 0) mult_.pop_back();
  for (int m : mult_)
    if (m < 0) throw Error("partition multiplicities must be non-negative");
  if (mult_.size() == 1) throw Error("partition needs at least one part");
}

Partition Partition::from_parts(const std::vector<int>& parts) {
  int largest = 0;
  for (int p : parts) {
    if (p < 1) throw Error("partition parts must be positive");
    largest = std::max(largest, p);
  }
  std::vector<int> mult(largest + 1, 0);
  for (int p : parts) ++mult[p];
  return Partition(std::move(mult));
}

int Partition::multiplicity(int i) const {
  return i >= 1 && i < static_cast<int>(mult_.size()) ? mult_[i] : 0;
}

int Partition::n() const {
  int total = 0;
  for (std::size_t i = 1; i < mult_.size(); ++i) total += static_cast<int>(i) * mult_[i];
  return total;
}

int Partition::size() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

int Partition::gcd() const {
  int g = 0;
  for (std::size_t i = 1; i < mult_.size(); ++i)
    if (mult_[i] != 0) g = std::gcd(g, static_cast<int>(i));
  return g;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (std::size_t i = mult_.size(); i-- > 1;)
    for (int k = 0; k < mult_[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int p : parts()) {
    if (!first) os << ',';
    first = false;
    os << p;
  }
  os << ')';
  return os.str();
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(parts));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    extend(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw Error("partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> parts;
  extend(n, n, parts, out);
  return out;
}

std::uint64_t tau(int l, int m, int g, int d) {
  if (l < 1 || m < 1 || g < 1 || d < 0) throw Error("tau: arguments out of range");
  // r = (g / (m,g)) r' with r' in Z_{(m,g)}^d, and likewise s with (l,g).
  const int mg = std::gcd(m, g);
  const int lg = std::gcd(l, g);
  const int r_step = g / mg;
  const int s_step = g / lg;

  auto enumerate = [d](int modulus, auto&& visit) {
    std::vector<int> x(d, 0);
    for (;;) {
      visit(x);
      int i = 0;
      while (i < d) {
        if (++x[i] < modulus) break;
        x[i] = 0;
        ++i;
      }
      if (i == d) return;
    }
  };

  std::uint64_t count = 0;
  enumerate(mg, [&](const std::vector<int>& r) {
    enumerate(lg, [&](const std::vector<int>& s) {
      long pairing = 0;
      for (int j = 0; j < d; ++j) pairing += static_cast<long>(r[j] * r_step) * (s[j] * s_step);
      if (pairing % g == 0) ++count;
    });
  });
  return count;
}

namespace {

using Series = std::vector<Polynomial>;  // coefficient of t^k at index k

Series multiply_truncated(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

Polynomial sym_e_polynomial(const Polynomial& e_a, int a) {
  if (a < 0) throw Error("sym_e_polynomial: a must be non-negative");
  Series series(a + 1);
  series[0] = Polynomial(1);
  for (const auto& [exp, coeff] : e_a.terms()) {
    if (coeff.get_den() != 1)
      throw Error("sym_e_polynomial: E(A) must have integer coefficients");
    const long e = coeff.get_num().get_si();
    const Polynomial x = Polynomial::monomial(exp.first, exp.second);
    Series factor(a + 1);
    if (e > 0) {
      // (1 - x t)^{-e} = sum_k binom(e + k - 1, k) x^k t^k
      Integer binom = 1;
      for (int k = 0; k <= a; ++k) {
        factor[k] = x.pow(k) * Rational(binom);
        binom = binom * (e + k);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
      }
    } else {
      // (1 - x t)^{|e|} = sum_k (-1)^k binom(|e|, k) x^k t^k
      const long f = -e;
      for (int k = 0; k <= a && k <= f; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned long>(k));
        if (k % 2) binom = -binom;
        factor[k] = x.pow(k) * Rational(binom);
      }
    }
    series = multiply_truncated(series, factor);
  }
  return series[a];
}

Polynomial direct_sym_oracle(const Polynomial& e_a, int a) {
  if (a < 0 || a > 5) throw Error("direct_sym_oracle: a must be in [0, 5]");
  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum;
  long count = 0;
  do {
    Polynomial term(1);
    std::vector<bool> seen(a, false);
    for (int s = 0; s < a; ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (int x = s; !seen[x]; x = perm[x]) {
        seen[x] = true;
        ++len;
      }
      term = term * e_a.substitute_power(len);
    }
    sum += term;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * ratio(1, count);
}

int circle_factor_count(const Polynomial& e_a) {
  if (e_a.is_zero()) throw Error("circle_factor_count: zero polynomial");
  // Expand E_A(1 + s, 1 + s) as a polynomial in s and find the lowest nonzero degree.
  std::vector<Rational> in_s;
  for (const auto& [exp, coeff] : e_a.terms()) {
    const unsigned long deg = static_cast<unsigned long>(exp.first + exp.second);
    if (in_s.size() < deg + 1) in_s.resize(deg + 1, Rational(0));
    for (unsigned long k = 0; k <= deg; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), deg, k);
      in_s[k] += coeff * Rational(b);
    }
  }
  for (std::size_t k = 0; k < in_s.size(); ++k)
    if (in_s[k] != 0) return static_cast<int>(k);
  throw Error("circle_factor_count: polynomial vanishes identically on the diagonal");
}

ClosedForm closed_form_terms(int n, int m, int d, const Polynomial& e_a) {
  if (n < 1) throw Error("closed_form_eorb: n must be positive");
  if (m < 1 || n % m != 0)
    throw Error("closed_form_eorb: m = " + std::to_string(m) + " does not divide n = " +
                std::to_string(n));
  if (d < 0) throw Error("closed_form_eorb: d must be non-negative");
  if (const int expected = circle_factor_count(e_a); expected != d)
    throw Error("closed_form_eorb: d = " + std::to_string(d) + " but E(A) has " +
                std::to_string(expected) + " circle factors");
  const int l = n / m;
  ClosedForm out;
  Polynomial sum;
  for (const auto& alpha : partitions(n)) {
    ClosedFormTerm t{alpha, tau(l, m, alpha.gcd(), d), n - alpha.size(), {}};
    Polynomial product(1);
    for (int i = 1; i <= alpha.largest_part(); ++i)
      if (alpha.multiplicity(i) > 0) product = product * sym_e_polynomial(e_a, alpha.multiplicity(i));
    t.numerator = product * Polynomial::monomial(t.shift, t.shift) *
                  Rational(Integer(static_cast<unsigned long>(t.tau)));
    sum += t.numerator;
    out.terms.push_back(std::move(t));
  }
  out.total = epoly::exact_divide(sum, e_a);
  return out;
}

Polynomial closed_form_eorb(int n, int m, int d, const Polynomial& e_a) {
  return closed_form_terms(n, m, d, e_a).total;
}

Polynomial abelian_group_polynomial(const std::string& name) {
  const Polynomial one(1);
  const Polynomial cstar = Polynomial::uv() - one;
  const Polynomial elliptic = (one - Polynomial::u()) * (one - Polynomial::v());
  if (name == "point") return one;
  if (name == "cstar") return cstar;
  if (name == "elliptic") return elliptic;
  if (name == "betti") return cstar * cstar;
  if (name == "abelian") return elliptic * elliptic;
  if (name == "dolbeault") return elliptic * Polynomial::uv();
  throw Error("unknown abelian group '" + name + "'");
}

}  // namespace eorb::sln
