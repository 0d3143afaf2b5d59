#pragma once

// Coweight lattices with Weyl group actions and their Langlands duals.
//
// A datum lives in a fixed rational ambient space Q^N: the lattice is spanned
// by the columns of `basis / denominator`. Weyl generators act on basis
// coordinates. Classical types follow Bourbaki: "simply connected" is the
// coroot lattice, "adjoint" the full coweight lattice, both written in the
// standard Z^n coordinates of the Cartan subalgebra.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eorb/matrix.hpp"

namespace eorb::roots {

class DatumError : public Error {
 public:
  using Error::Error;
};

struct RootDatum {
  std::string label;
  IntegerMatrix basis;  // ambient_dim x rank
  Integer denominator = 1;
  std::vector<IntegerMatrix> generators;  // rank x rank, act on basis coordinates
  RationalMatrix gram;                    // rank x rank invariant form

  std::size_t rank() const { return basis.cols(); }
  std::size_t ambient_dimension() const { return basis.rows(); }

  friend bool operator==(const RootDatum&, const RootDatum&) = default;
};

enum class ClassicalFamily { B, C, D };
enum class GroupForm { simply_connected, adjoint };

/// Coweight lattice of SL(n)/Z_m inside the sum-zero hyperplane of Q^n.
RootDatum sl_quotient_datum(int n, int m);

RootDatum classical_datum(ClassicalFamily family, int n, GroupForm form);

/// Rank-0 datum with trivial Weyl group.
RootDatum trivial_datum();

/// Hom(Lambda, Z) realized through the gram pairing. Generators become inverse
/// transposes (in the dual basis) and the form becomes the inverse form.
RootDatum dual_datum(const RootDatum& datum);

/// Same datum with the invariant form multiplied by a positive rational.
RootDatum rescale_gram(const RootDatum& datum, const Rational& factor);

/// Checks every invariant and throws DatumError naming the first violation.
void validate(const RootDatum& datum);

/// Matrix of <x, y> for x in the basis of `a` and y in the basis of `b`,
/// using the ambient pairing induced by `a.gram`. Identity iff b is the dual of a.
RationalMatrix pairing_matrix(const RootDatum& a, const RootDatum& b);

/// Basis change P with basis(b)/den(b) = basis(a)/den(a) * P, when both data
/// span the same lattice of the ambient space.
std::optional<IntegerMatrix> lattice_transition(const RootDatum& a, const RootDatum& b);

/// Index [super : sub] for a sublattice of the same ambient space; throws if
/// `sub` is not contained in `super` with finite index.
Integer lattice_index(const RootDatum& sub, const RootDatum& super);

/// Same ambient lattice, same form, and the same generated group after
/// transporting b's generators into a's basis.
bool equivalent(const RootDatum& a, const RootDatum& b, std::size_t cap = 1'000'000);

RootDatum parse_datum(std::istream& in);
RootDatum load_datum(const std::string& path);
std::string format_datum(const RootDatum& datum);

std::string to_string(ClassicalFamily family);
std::string to_string(GroupForm form);

}  // namespace eorb::roots
