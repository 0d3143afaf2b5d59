#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eorb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized num/den.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over an exact scalar type (mpz_class or mpq_class).
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw Error("matrix entry count " + std::to_string(entries_.size()) +
                  " does not match " + std::to_string(rows_) + "x" +
                  std::to_string(cols_));
  }
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  /// Columns [first, first + count) as a new matrix.
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix c(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) c(i, j) = (*this)(i, first + j);
    return c;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  /// Horizontal concatenation [this | other].
  Matrix hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw Error("hconcat: row count mismatch");
    Matrix r(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& e : a.entries_) e = -e;
    return a;
  }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error("matrix product: " + std::to_string(a.rows_) + "x" +
                  std::to_string(a.cols_) + " times " + std::to_string(b.rows_) +
                  "x" + std::to_string(b.cols_));
    Matrix r(a.rows_, b.cols_);
    Scalar tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          r(i, j) += tmp;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Lexicographic order on (rows, cols, entries); used only for deterministic sorting.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      int c = cmp(a.entries_[k], b.entries_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

struct MatrixHash {
  std::size_t operator()(const IntegerMatrix& m) const noexcept;
};

RationalMatrix to_rational(const IntegerMatrix& m);

/// Converts a rational matrix with integral entries; throws if any entry is fractional.
IntegerMatrix to_integer(const RationalMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Inverse over the rationals; throws on a singular matrix.
RationalMatrix inverse(const RationalMatrix& m);

bool is_unimodular(const IntegerMatrix& m);

/// Inverse of a unimodular matrix; throws if the matrix is not unimodular.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// (m^{-1})^T, the contragredient action on the dual lattice.
IntegerMatrix inverse_transpose(const IntegerMatrix& m);

/// Smallest k >= 1 with m^k = I, or 0 if none exists up to `bound`.
std::size_t matrix_order(const IntegerMatrix& m, std::size_t bound = 1000);

std::string to_string(const IntegerMatrix& m);

}  // namespace eorb
