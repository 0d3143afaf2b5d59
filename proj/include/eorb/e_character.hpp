#pragma once

// Equivariant E-polynomials of the torus factors A (x) M, where a finite-order
// lattice automorphism c acts through M. The trace of c on compactly supported
// cohomology is packaged as a polynomial in u, v:
//
//   elliptic     det(1 - u c) det(1 - v c)
//   c_star       det(uv - c)
//   affine_line  (uv)^rank

#include <span>
#include <string>
#include <vector>

#include "eorb/matrix.hpp"
#include "eorb/polynomial.hpp"

namespace eorb::epoly {

enum class FactorKind { elliptic, c_star, affine_line };
enum class LatticeSide { primal, dual };

/// Number of U(1) factors d in A = R^c x U(1)^d.
int circle_count(FactorKind kind);

struct SpaceFactor {
  FactorKind kind;
  LatticeSide side;
  friend bool operator==(const SpaceFactor&, const SpaceFactor&) = default;
};

class SpaceDescriptor {
 public:
  SpaceDescriptor(std::string name, std::vector<SpaceFactor> factors);

  /// betti, dolbeault, derham, abelian-surface, mixed.
  static SpaceDescriptor from_name(const std::string& name);
  static SpaceDescriptor betti();
  static SpaceDescriptor dolbeault();
  static SpaceDescriptor de_rham();
  static SpaceDescriptor abelian_surface();
  static SpaceDescriptor mixed();

  const std::string& name() const { return name_; }
  const std::vector<SpaceFactor>& factors() const { return factors_; }
  bool uses_side(LatticeSide side) const;

 private:
  std::string name_;
  std::vector<SpaceFactor> factors_;
};

/// Names accepted by SpaceDescriptor::from_name, in display order.
std::vector<std::string> space_names();

std::string to_string(FactorKind kind);

struct Monomial {
  int p = 0;
  int q = 0;
};

/// Coefficients of det(t*1 - c), index k holding the coefficient of t^k.
std::vector<Integer> characteristic_polynomial(const IntegerMatrix& c);

/// det(1 - x c) for the monomial x = u^p v^q.
BivariatePolynomial char_poly_product(const IntegerMatrix& c, Monomial x);

BivariatePolynomial factor_e_character(FactorKind kind, const IntegerMatrix& c);

/// Product of the factor characters; `actions[i]` is c restricted to the
/// lattice underlying factor i.
BivariatePolynomial space_e_character(const SpaceDescriptor& space,
                                      std::span<const IntegerMatrix> actions);

}  // namespace eorb::epoly
