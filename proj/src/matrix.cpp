#include "eorb/matrix.hpp"

#include <sstream>

namespace eorb {

std::size_t MatrixHash::operator()(const IntegerMatrix& m) const noexcept {
  std::size_t h = m.rows() * 0x9e3779b97f4a7c15ULL + m.cols();
  for (const auto& e : m.entries()) {
    auto v = static_cast<std::size_t>(mpz_get_si(e.get_mpz_t()));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw Error("non-integral entry " + m(i, j).get_str() + " at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row-reduces in place; returns rank and accumulates the determinant sign/product.
std::size_t row_reduce(RationalMatrix& a, Rational* det = nullptr) {
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      d = -d;
    }
    Rational pivot = a(r, c);
    d *= pivot;
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (det) *det = (r == a.rows() && r == a.cols()) ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  RationalMatrix a = m;
  Rational d;
  row_reduce(a, &d);
  return d;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a);
}

std::size_t rank(const IntegerMatrix& m) { return rank(to_rational(m)); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug = m.hconcat(RationalMatrix::identity(n));
  if (row_reduce(aug) < n) throw Error("inverse of singular matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != 1) throw Error("inverse of singular matrix");
  return aug.columns(n, n);
}

bool is_unimodular(const IntegerMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (!is_unimodular(m)) throw Error("matrix is not unimodular: " + to_string(m));
  return to_integer(inverse(to_rational(m)));
}

IntegerMatrix inverse_transpose(const IntegerMatrix& m) {
  return unimodular_inverse(m).transpose();
}

std::size_t matrix_order(const IntegerMatrix& m, std::size_t bound) {
  if (!m.is_square()) return 0;
  IntegerMatrix p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace eorb
