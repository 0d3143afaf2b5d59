#include "support/oracles.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using eorb::Rational;
using eorb::RationalMatrix;

namespace {

// Calls visit on every k-subset of {0..n-1}, in lexicographic order.
void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t a = 0; a < n; ++a)
        if (a != i) rows.push_back(a);
      for (std::size_t b = 0; b < n; ++b)
        if (b != j) cols.push_back(b);
      const Integer minor = laplace_determinant(m.submatrix(rows, cols));
      adj(j, i) = ((i + j) % 2 ? -minor : minor);
    }
  return adj;
}

Integer mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

// Counts x in (Z/N)^r (N = |det m|) satisfying pred(x) where membership of a
// vector y in im m is tested as adj(m) y = 0 mod det m.
Integer count_in_box(const IntegerMatrix& m, const std::function<IntegerMatrix(const IntegerMatrix&)>& image) {
  const std::size_t r = m.rows();
  const Integer det = laplace_determinant(m);
  if (det == 0) throw std::invalid_argument("count_in_box: singular matrix");
  const Integer n = abs(det);
  const IntegerMatrix adj = adjugate(m);
  const long box = n.get_si();
  std::vector<long> x(r, 0);
  Integer count = 0;
  for (;;) {
    IntegerMatrix v(r, 1);
    for (std::size_t i = 0; i < r; ++i) v(i, 0) = x[i];
    const IntegerMatrix y = adj * image(v);
    bool member = true;
    for (std::size_t i = 0; i < r && member; ++i) member = mod(y(i, 0), n) == 0;
    if (member) ++count;
    std::size_t i = 0;
    while (i < r && ++x[i] == box) x[i++] = 0;
    if (i == r) break;
  }
  return count;
}

}  // namespace

Integer laplace_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("laplace_determinant: not square");
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  std::vector<std::size_t> rows;
  for (std::size_t a = 1; a < n; ++a) rows.push_back(a);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t b = 0; b < n; ++b)
      if (b != j) cols.push_back(b);
    const Integer term = m(0, j) * laplace_determinant(m.submatrix(rows, cols));
    det += (j % 2 ? -term : term);
  }
  return det;
}

std::vector<Integer> determinantal_divisors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = gcd(g, laplace_determinant(m.submatrix(rows, cols)));
      });
    });
    if (g == 0) break;
    const Integer d = g / previous;
    if (d != 1) out.push_back(d);
    previous = g;
  }
  return out;
}

Integer brute_force_fixed_cosets(const IntegerMatrix& m, const IntegerMatrix& c) {
  const IntegerMatrix c_minus_1 = c - IntegerMatrix::identity(c.rows());
  const Integer fixed = count_in_box(m, [&](const IntegerMatrix& v) { return c_minus_1 * v; });
  const Integer trivial = count_in_box(m, [](const IntegerMatrix& v) { return v; });
  return fixed / trivial;
}

Integer brute_force_killed_by(const IntegerMatrix& m, long k) {
  const Integer killed = count_in_box(m, [k](const IntegerMatrix& v) { return v * Integer(k); });
  const Integer trivial = count_in_box(m, [](const IntegerMatrix& v) { return v; });
  return killed / trivial;
}

Integer brute_force_fixed_points(const std::vector<Integer>& divisors, const IntegerMatrix& a) {
  const std::size_t r = divisors.size();
  std::vector<Integer> x(r, 0);
  Integer count = 0;
  for (;;) {
    bool fixed = true;
    for (std::size_t i = 0; i < r && fixed; ++i) {
      Integer y = 0;
      for (std::size_t j = 0; j < r; ++j) y += a(i, j) * x[j];
      fixed = mod(y - x[i], divisors[i]) == 0;
    }
    if (fixed) ++count;
    std::size_t i = 0;
    while (i < r && ++x[i] == divisors[i]) x[i++] = 0;
    if (i == r) break;
  }
  return count;
}

namespace {

// e_k(c): sum of principal k x k minors.
Integer elementary(const IntegerMatrix& c, std::size_t k) {
  Integer e = 0;
  subsets(c.rows(), k, [&](const std::vector<std::size_t>& idx) {
    e += laplace_determinant(c.submatrix(idx, idx));
  });
  return e;
}

}  // namespace

Polynomial exterior_char_poly(const IntegerMatrix& c, int p, int q) {
  Polynomial out;
  for (std::size_t k = 0; k <= c.rows(); ++k) {
    Integer e = elementary(c, k);
    if (k % 2) e = -e;
    out += Polynomial::monomial(p * static_cast<int>(k), q * static_cast<int>(k), Rational(e));
  }
  return out;
}

Polynomial exterior_c_star(const IntegerMatrix& c) {
  const std::size_t r = c.rows();
  Polynomial out;
  for (std::size_t k = 0; k <= r; ++k) {
    Integer e = elementary(c, k);
    if (k % 2) e = -e;
    const int deg = static_cast<int>(r - k);
    out += Polynomial::monomial(deg, deg, Rational(e));
  }
  return out;
}

std::vector<std::uint64_t> partition_numbers(int n) {
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::int64_t sum = 0;
    for (int k = 1;; ++k) {
      const int a = i - k * (3 * k - 1) / 2;
      const int b = i - k * (3 * k + 1) / 2;
      if (a < 0) break;
      const std::int64_t sign = k % 2 ? 1 : -1;
      sum += sign * p[a];
      if (b >= 0) sum += sign * p[b];
    }
    p[i] = sum;
  }
  return {p.begin(), p.end()};
}

std::uint64_t brute_force_tau(int l, int m, int g, int d) {
  const int mg = std::gcd(m, g);
  const int lg = std::gcd(l, g);
  std::uint64_t total = 1;
  for (int i = 0; i < 2 * d; ++i) total *= static_cast<std::uint64_t>(g);
  std::uint64_t count = 0;
  std::vector<int> r(d), s(d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int j = 0; j < d; ++j) {
      r[j] = static_cast<int>(c % g);
      c /= g;
    }
    for (int j = 0; j < d; ++j) {
      s[j] = static_cast<int>(c % g);
      c /= g;
    }
    bool ok = true;
    long pairing = 0;
    for (int j = 0; j < d && ok; ++j) {
      ok = (mg * r[j]) % g == 0 && (lg * s[j]) % g == 0;
      pairing += static_cast<long>(r[j]) * s[j];
    }
    if (ok && pairing % g == 0) ++count;
  }
  return count;
}

std::vector<int> ambient_permutation(const eorb::roots::RootDatum& datum, const IntegerMatrix& w) {
  const std::size_t n = datum.ambient_dimension();
  const std::size_t r = datum.rank();
  RationalMatrix e(n, n);
  RationalMatrix block(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) e(i, j) = Rational(datum.basis(i, j));
    e(i, r) = 1;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) block(i, j) = Rational(w(i, j));
  block(r, r) = 1;
  const RationalMatrix sigma = e * block * eorb::inverse(e);
  std::vector<int> perm(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma(i, j) == 1) {
        if (perm[j] != -1) throw std::logic_error("ambient_permutation: not a permutation");
        perm[j] = static_cast<int>(i);
      } else if (sigma(i, j) != 0) {
        throw std::logic_error("ambient_permutation: not a permutation");
      }
    }
  return perm;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

std::vector<eorb::roots::RootDatum> builtin_data(std::size_t max_rank) {
  using namespace eorb::roots;
  std::vector<RootDatum> out;
  for (int n = 2; static_cast<std::size_t>(n - 1) <= max_rank; ++n)
    for (int m = 1; m <= n; ++m)
      if (n % m == 0) out.push_back(sl_quotient_datum(n, m));
  for (int n = 2; static_cast<std::size_t>(n) <= max_rank; ++n)
    for (auto family : {ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D}) {
      if (family == ClassicalFamily::D && n < 3) continue;
      for (auto form : {GroupForm::simply_connected, GroupForm::adjoint})
        out.push_back(classical_datum(family, n, form));
    }
  return out;
}

}  // namespace oracle
