#pragma once

// Integer lattice algebra built on Smith and Hermite normal forms.
// Finite abelian groups arise here as torsion of cokernels.

#include <functional>
#include <vector>

#include "eorb/matrix.hpp"

namespace eorb::lattice {

/// U * M * V = D with U, V unimodular and D diagonal. The nonzero diagonal
/// entries come first, are positive, and each divides the next.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  /// Diagonal entries d_1 .. d_min(rows, cols), zeros included.
  std::vector<Integer> diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Deterministic Smith normal form. Pivots are chosen by smallest absolute
/// value, ties broken by lowest (row, column) index.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Canonical basis of the lattice spanned by the columns of `generators`:
/// lower column echelon form with positive pivots and entries left of each
/// pivot reduced into [0, pivot). Returns a rows x rank matrix.
IntegerMatrix column_hermite_basis(const IntegerMatrix& generators);

/// Saturated basis (as columns, in column Hermite form) of ker(m) in Z^cols.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

/// Basis of the fixed sublattice ker(w - 1) of a unimodular w.
IntegerMatrix fixed_sublattice(const IntegerMatrix& w);

/// True when Z^n / span(basis) is torsion free.
bool is_saturated(const IntegerMatrix& basis);

/// Matrix X with basis * X = c * basis. Throws if span(basis) is not
/// c-invariant or the restriction is not integral.
IntegerMatrix restrict_action(const IntegerMatrix& c, const IntegerMatrix& basis);

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Elementary divisors d_1 | d_2 | ... with every d_i >= 2.
  explicit FiniteAbelianGroup(std::vector<Integer> divisors);

  const std::vector<Integer>& divisors() const { return divisors_; }
  std::size_t generator_count() const { return divisors_.size(); }
  Integer order() const;
  bool is_trivial() const { return divisors_.empty(); }

  /// Calls `visit` on every element (residue tuple). Only for small groups.
  void for_each_element(const std::function<void(const std::vector<Integer>&)>& visit) const;

  /// Diagonal matrix of the divisors.
  IntegerMatrix relation_matrix() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> divisors_;
};

/// An automorphism of a FiniteAbelianGroup, acting on residue column vectors
/// by an integer matrix (entries meaningful modulo the target divisor).
class GroupAutomorphism {
 public:
  GroupAutomorphism(FiniteAbelianGroup group, IntegerMatrix matrix);

  const FiniteAbelianGroup& group() const { return group_; }
  const IntegerMatrix& matrix() const { return matrix_; }

  std::vector<Integer> apply(const std::vector<Integer>& element) const;

 private:
  FiniteAbelianGroup group_;
  IntegerMatrix matrix_;
};

/// Number of elements fixed by the automorphism, computed as the product of
/// the Smith divisors of [A - 1 | D].
Integer fixed_count(const GroupAutomorphism& aut);

/// Tor(Z^r / im M) together with the coordinates needed to push lattice
/// automorphisms down to it.
class CokernelTorsion {
 public:
  explicit CokernelTorsion(const IntegerMatrix& m);

  const FiniteAbelianGroup& group() const { return group_; }
  const SmithDecomposition& smith() const { return smith_; }

  /// Action of c on the torsion subgroup. Throws if c does not preserve im M.
  GroupAutomorphism induced_automorphism(const IntegerMatrix& c) const;

 private:
  IntegerMatrix source_;
  SmithDecomposition smith_;
  IntegerMatrix u_inverse_;
  std::vector<std::size_t> torsion_coords_;
  FiniteAbelianGroup group_;
};

/// Tor(Z^rows / im M) as a direct sum of cyclic groups.
FiniteAbelianGroup torsion_of_cokernel(const IntegerMatrix& m);

GroupAutomorphism induced_automorphism(const IntegerMatrix& c, const IntegerMatrix& m);

}  // namespace eorb::lattice
