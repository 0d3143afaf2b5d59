#include "eorb/lattice.hpp"

#include <algorithm>

namespace eorb::lattice {

namespace {

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(IntegerMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
}

// row_i += f * row_k
void add_row(IntegerMatrix& a, std::size_t i, std::size_t k, const Integer& f) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += f * a(k, j);
}

// col_i += f * col_k
void add_col(IntegerMatrix& a, std::size_t i, std::size_t k, const Integer& f) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, k);
}

void negate_row(IntegerMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
}

void negate_col(IntegerMatrix& a, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) = -a(r, j);
}

// Smallest nonzero |a(i, j)| with i, j >= t; ties go to the lowest (i, j).
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("smith_normal_form: empty matrix");
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(a, t, pi, pj)) break;
    for (;;) {
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);

      bool remainder = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) remainder = true;
      }
      if (remainder) {
        find_pivot(a, t, pi, pj);
        continue;
      }

      // Row t and column t are clear; enforce divisibility of the remainder.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
      pi = t;
      pj = t;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntegerMatrix column_hermite_basis(const IntegerMatrix& generators) {
  IntegerMatrix a = generators;
  std::size_t k = 0;  // number of pivot columns so far
  for (std::size_t row = 0; row < a.rows() && k < a.cols(); ++row) {
    // Euclid across columns k.. until only column k is nonzero in this row.
    for (;;) {
      std::size_t best = a.cols();
      for (std::size_t j = k; j < a.cols(); ++j)
        if (a(row, j) != 0 && (best == a.cols() || abs(a(row, j)) < abs(a(row, best))))
          best = j;
      if (best == a.cols()) break;
      swap_cols(a, k, best);
      bool others = false;
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(row, j) == 0) continue;
        add_col(a, j, k, -floor_div(a(row, j), a(row, k)));
        if (a(row, j) != 0) others = true;
      }
      if (!others) break;
    }
    if (k == a.cols() || a(row, k) == 0) continue;
    if (a(row, k) < 0) negate_col(a, k);
    for (std::size_t j = 0; j < k; ++j) add_col(a, j, k, -floor_div(a(row, j), a(row, k)));
    ++k;
  }
  return a.columns(0, k);
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  const SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  const std::size_t n = m.cols();
  if (r == n) return IntegerMatrix(n, 0);
  return column_hermite_basis(snf.V.columns(r, n - r));
}

IntegerMatrix fixed_sublattice(const IntegerMatrix& w) {
  if (!w.is_square()) throw Error("fixed_sublattice: matrix is not square");
  if (w.rows() == 0) return IntegerMatrix(0, 0);
  return integer_kernel(w - IntegerMatrix::identity(w.rows()));
}

bool is_saturated(const IntegerMatrix& basis) {
  if (basis.cols() == 0) return true;
  const SmithDecomposition snf = smith_normal_form(basis);
  if (snf.rank() != basis.cols()) return false;
  for (const auto& d : snf.diagonal())
    if (d != 1) return false;
  return true;
}

IntegerMatrix restrict_action(const IntegerMatrix& c, const IntegerMatrix& basis) {
  if (basis.cols() == 0) return IntegerMatrix(0, 0);
  const RationalMatrix b = to_rational(basis);
  const RationalMatrix bt = b.transpose();
  const RationalMatrix image = to_rational(c * basis);
  const RationalMatrix x = inverse(bt * b) * (bt * image);
  if (!(b * x == image)) throw Error("restrict_action: sublattice is not invariant");
  return to_integer(x);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> divisors)
    : divisors_(std::move(divisors)) {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] < 2)
      throw Error("elementary divisor " + divisors_[i].get_str() + " is below 2");
    if (i > 0 && !mpz_divisible_p(divisors_[i].get_mpz_t(), divisors_[i - 1].get_mpz_t()))
      throw Error("elementary divisors do not form a divisibility chain");
  }
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : divisors_) n *= d;
  return n;
}

void FiniteAbelianGroup::for_each_element(
    const std::function<void(const std::vector<Integer>&)>& visit) const {
  std::vector<Integer> x(divisors_.size(), 0);
  for (;;) {
    visit(x);
    std::size_t i = 0;
    while (i < x.size()) {
      if (++x[i] < divisors_[i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == x.size()) return;
  }
}

IntegerMatrix FiniteAbelianGroup::relation_matrix() const {
  IntegerMatrix d(divisors_.size(), divisors_.size());
  for (std::size_t i = 0; i < divisors_.size(); ++i) d(i, i) = divisors_[i];
  return d;
}

namespace {

// Product of the nonzero Smith divisors of m; m must have full row rank.
Integer index_of_column_span(const IntegerMatrix& m) {
  if (m.rows() == 0) return 1;
  const SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank() != m.rows()) throw Error("lattice index: span has infinite index");
  Integer n = 1;
  for (const auto& d : snf.diagonal()) n *= d;
  return n;
}

}  // namespace

GroupAutomorphism::GroupAutomorphism(FiniteAbelianGroup group, IntegerMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  const std::size_t k = group_.generator_count();
  if (matrix_.rows() != k || matrix_.cols() != k)
    throw Error("automorphism matrix has the wrong shape");
  const auto& d = group_.divisors();
  for (std::size_t i = 0; i < k; ++i) {
    mpz_mod(matrix_(i, i).get_mpz_t(), matrix_(i, i).get_mpz_t(), d[i].get_mpz_t());
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) mpz_mod(matrix_(i, j).get_mpz_t(), matrix_(i, j).get_mpz_t(), d[i].get_mpz_t());
      Integer image_of_relation = matrix_(i, j) * d[j];
      if (!mpz_divisible_p(image_of_relation.get_mpz_t(), d[i].get_mpz_t()))
        throw Error("automorphism matrix is not well defined on the group");
    }
  }
  if (k > 0 && index_of_column_span(matrix_.hconcat(group_.relation_matrix())) != 1)
    throw Error("endomorphism is not surjective");
}

std::vector<Integer> GroupAutomorphism::apply(const std::vector<Integer>& element) const {
  const auto& d = group_.divisors();
  std::vector<Integer> out(element.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < element.size(); ++j) out[i] += matrix_(i, j) * element[j];
    mpz_mod(out[i].get_mpz_t(), out[i].get_mpz_t(), d[i].get_mpz_t());
  }
  return out;
}

Integer fixed_count(const GroupAutomorphism& aut) {
  const std::size_t k = aut.group().generator_count();
  if (k == 0) return 1;
  IntegerMatrix shifted = aut.matrix() - IntegerMatrix::identity(k);
  return index_of_column_span(shifted.hconcat(aut.group().relation_matrix()));
}

CokernelTorsion::CokernelTorsion(const IntegerMatrix& m)
    : source_(m), smith_(smith_normal_form(m)), u_inverse_(unimodular_inverse(smith_.U)) {
  std::vector<Integer> divisors;
  const auto diag = smith_.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] >= 2) {
      torsion_coords_.push_back(i);
      divisors.push_back(diag[i]);
    }
  group_ = FiniteAbelianGroup(std::move(divisors));
}

GroupAutomorphism CokernelTorsion::induced_automorphism(const IntegerMatrix& c) const {
  if (!c.is_square() || c.rows() != source_.rows())
    throw Error("induced_automorphism: matrix does not act on the ambient lattice");
  const IntegerMatrix conj = smith_.U * c * u_inverse_;
  const auto diag = smith_.diagonal();
  const std::size_t r = smith_.rank();
  // conj must map D Z^n into itself: column j (j < r) scaled by d_j lands in
  // d_i Z for rows i < r and vanishes in rows i >= r.
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < conj.rows(); ++i) {
      Integer image = conj(i, j) * diag[j];
      bool ok = i < r ? mpz_divisible_p(image.get_mpz_t(), diag[i].get_mpz_t()) != 0
                      : image == 0;
      if (!ok)
        throw Error("induced_automorphism: element does not preserve the image lattice " +
                    to_string(c));
    }
  return GroupAutomorphism(group_, conj.submatrix(torsion_coords_, torsion_coords_));
}

FiniteAbelianGroup torsion_of_cokernel(const IntegerMatrix& m) {
  return CokernelTorsion(m).group();
}

GroupAutomorphism induced_automorphism(const IntegerMatrix& c, const IntegerMatrix& m) {
  return CokernelTorsion(m).induced_automorphism(c);
}

}  // namespace eorb::lattice
