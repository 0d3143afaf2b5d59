#pragma once

// Closed form for E_orb((A (x) Lambda)/S_n) with Lambda the coweight lattice of
// SL(n)/Z_m:
//
//   (1 / E(A)) * sum over partitions alpha of n of
//       tau_{l,m}^{g(alpha),d} (uv)^{n - |alpha|} prod_i E(Sym^{alpha_i} A)
//
// with l = n / m and d the number of U(1) factors of A.

#include <cstdint>
#include <string>
#include <vector>

#include "eorb/polynomial.hpp"

namespace eorb::sln {

using epoly::Polynomial;

/// multiplicity(i) = number of parts equal to i.
class Partition {
 public:
  explicit Partition(std::vector<int> multiplicities);  // index 0 unused

  /// Builds from a list of parts (any order).
  static Partition from_parts(const std::vector<int>& parts);

  int multiplicity(int i) const;
  int largest_part() const { return static_cast<int>(mult_.size()) - 1; }
  int n() const;
  int size() const;  // number of parts |alpha|
  int gcd() const;   // gcd of the part lengths
  /// Parts in non-increasing order.
  std::vector<int> parts() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> mult_;
};

/// All partitions of n, largest parts first (reverse lexicographic).
std::vector<Partition> partitions(int n);

/// #{(r, s) in Z_g^d x Z_g^d : (m,g) r = 0 = (l,g) s, sum r_j s_j = 0 mod g}.
std::uint64_t tau(int l, int m, int g, int d);

/// Coefficient of t^a in prod_{p,q} (1 - u^p v^q t)^{-e^{p,q}(A)}.
Polynomial sym_e_polynomial(const Polynomial& e_a, int a);

/// (1/a!) sum over sigma in S_a of prod over cycles of length i of E_A(u^i, v^i),
/// by explicit enumeration of S_a. a <= 5.
Polynomial direct_sym_oracle(const Polynomial& e_a, int a);

/// Order of vanishing of E_A(1 + s, 1 + s) at s = 0, which equals the number
/// of U(1) factors for a connected abelian group A.
int circle_factor_count(const Polynomial& e_a);

struct ClosedFormTerm {
  Partition alpha;
  std::uint64_t tau = 0;
  int shift = 0;
  Polynomial numerator;  // tau (uv)^shift prod E(Sym^{alpha_i} A)
};

struct ClosedForm {
  std::vector<ClosedFormTerm> terms;
  Polynomial total;
};

ClosedForm closed_form_terms(int n, int m, int d, const Polynomial& e_a);
Polynomial closed_form_eorb(int n, int m, int d, const Polynomial& e_a);

/// Named two-dimensional abelian groups: "abelian" (E x E), "betti"
/// (C* x C*), "dolbeault" (E x C), plus the one-dimensional building blocks
/// "point", "cstar", "elliptic".
Polynomial abelian_group_polynomial(const std::string& name);

}  // namespace eorb::sln
