#pragma once

// Orbifold E-polynomials of (A (x) Lambda)/W:
//
//   E_orb = sum over classes {w} of  avg_{c in C(w)} E_c(X^w) * (uv)^F(w)
//
// where X^w splits per factor into the identity component A (x) Lambda^w and
// pi_0 = Tor(Lambda / (w-1) Lambda)^d. An element c of the centralizer
// contributes (its fixed count on pi_0)^d times its character on the
// identity component; translations act trivially on cohomology.

#include <cstddef>
#include <string>
#include <vector>

#include "eorb/e_character.hpp"
#include "eorb/lattice.hpp"
#include "eorb/polynomial.hpp"
#include "eorb/root_data.hpp"
#include "eorb/weyl.hpp"

namespace eorb::orbifold {

using epoly::Polynomial;

struct EngineOptions {
  std::size_t cap = 10'000'000;
  unsigned threads = 1;
};

/// rank(w - 1) over Q: the age of w on two copies of Lambda (x) C.
int fermionic_shift(const IntegerMatrix& w);

/// Sum of eigenvalue angles of w on Lambda (x) C, doubled, computed exactly from
/// the cyclotomic decomposition of w. Throws if the sum is not an integer.
int direct_shift_oracle(const IntegerMatrix& w);

/// Shift for a space with the given factors: (factor count) * rank(w - 1) / 2.
int space_shift(const epoly::SpaceDescriptor& space, const IntegerMatrix& w);

struct FixedPointData {
  IntegerMatrix w;
  IntegerMatrix fixed_basis;
  lattice::FiniteAbelianGroup pi0;
  int shift = 0;
};

FixedPointData fixed_point_data(const IntegerMatrix& w);

/// A datum together with its enumerated Weyl group and class table.
class WeylAction {
 public:
  WeylAction(roots::RootDatum datum, std::size_t cap);

  const roots::RootDatum& datum() const { return datum_; }
  const weyl::MatrixGroup& group() const { return group_; }
  const weyl::ConjugacyClassTable& classes() const { return classes_; }
  const IntegerMatrix& representative(std::size_t cls) const {
    return group_.element(classes_.classes[cls].representative);
  }

 private:
  roots::RootDatum datum_;
  weyl::MatrixGroup group_;
  weyl::ConjugacyClassTable classes_;
};

struct ClassContribution {
  IntegerMatrix representative;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  int shift = 0;
  std::vector<Integer> pi0_divisors;
  Polynomial average;   // bar E_{C(w)}(X^w)
  Polynomial weighted;  // average * (uv)^shift
};

/// Contribution of the class of w. `centralizer` must be C(w).
ClassContribution class_contribution(const epoly::SpaceDescriptor& space, const IntegerMatrix& w,
                                     const weyl::MatrixGroup& centralizer, std::size_t class_size);

ClassContribution class_contribution(const WeylAction& action, const epoly::SpaceDescriptor& space,
                                     const IntegerMatrix& w);

struct OrbifoldReport {
  std::string datum_label;
  std::string space;
  std::size_t group_order = 0;
  std::vector<ClassContribution> classes;
  Polynomial total;
};

OrbifoldReport orbifold_e_polynomial(const WeylAction& action, const epoly::SpaceDescriptor& space,
                                     const EngineOptions& options = {});
OrbifoldReport orbifold_e_polynomial(const roots::RootDatum& datum,
                                     const epoly::SpaceDescriptor& space,
                                     const EngineOptions& options = {});

struct PairDifference {
  std::size_t primal_class;
  std::size_t dual_class;
  Polynomial difference;
};

struct MirrorReport {
  OrbifoldReport primal;
  OrbifoldReport dual;
  std::vector<PairDifference> pairs;  // one per primal class, matched via w -> w^{-T}
  bool equal = false;
};

MirrorReport mirror_check(const roots::RootDatum& datum, const epoly::SpaceDescriptor& space,
                          const EngineOptions& options = {});

struct DualityRecord {
  IntegerMatrix representative;
  std::vector<Integer> primal_divisors;
  std::vector<Integer> dual_divisors;
  std::size_t centralizer_order = 0;
  // (fixed count on Tor(Lambda/F Lambda), fixed count on the dual side) per centralizer element.
  std::vector<std::pair<Integer, Integer>> fixed_counts;
  bool agrees = false;
};

struct DualityReport {
  std::string datum_label;
  std::vector<DualityRecord> classes;
  bool consistent = false;
};

DualityReport duality_check(const roots::RootDatum& datum, const EngineOptions& options = {});

}  // namespace eorb::orbifold
