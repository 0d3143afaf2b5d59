#include "eorb/e_character.hpp"

namespace eorb::epoly {

int circle_count(FactorKind kind) {
  switch (kind) {
    case FactorKind::elliptic: return 2;
    case FactorKind::c_star: return 1;
    case FactorKind::affine_line: return 0;
  }
  return 0;
}

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::elliptic: return "elliptic";
    case FactorKind::c_star: return "c_star";
    case FactorKind::affine_line: return "affine_line";
  }
  return "?";
}

SpaceDescriptor::SpaceDescriptor(std::string name, std::vector<SpaceFactor> factors)
    : name_(std::move(name)), factors_(std::move(factors)) {
  if (factors_.empty()) throw Error("space descriptor needs at least one factor");
}

SpaceDescriptor SpaceDescriptor::betti() {
  return {"betti",
          {{FactorKind::c_star, LatticeSide::primal}, {FactorKind::c_star, LatticeSide::primal}}};
}

SpaceDescriptor SpaceDescriptor::dolbeault() {
  return {"dolbeault",
          {{FactorKind::elliptic, LatticeSide::primal},
           {FactorKind::affine_line, LatticeSide::primal}}};
}

// J is an affine-line bundle over the elliptic curve, so its E-data match T*C.
SpaceDescriptor SpaceDescriptor::de_rham() {
  return {"derham",
          {{FactorKind::elliptic, LatticeSide::primal},
           {FactorKind::affine_line, LatticeSide::primal}}};
}

SpaceDescriptor SpaceDescriptor::abelian_surface() {
  return {"abelian-surface",
          {{FactorKind::elliptic, LatticeSide::primal}, {FactorKind::elliptic, LatticeSide::primal}}};
}

SpaceDescriptor SpaceDescriptor::mixed() {
  return {"mixed",
          {{FactorKind::elliptic, LatticeSide::dual}, {FactorKind::elliptic, LatticeSide::primal}}};
}

std::vector<std::string> space_names() {
  return {"betti", "dolbeault", "derham", "abelian-surface", "mixed"};
}

SpaceDescriptor SpaceDescriptor::from_name(const std::string& name) {
  if (name == "betti") return betti();
  if (name == "dolbeault") return dolbeault();
  if (name == "derham") return de_rham();
  if (name == "abelian-surface") return abelian_surface();
  if (name == "mixed") return mixed();
  throw Error("unknown space '" + name + "'");
}

bool SpaceDescriptor::uses_side(LatticeSide side) const {
  for (const auto& f : factors_)
    if (f.side == side) return true;
  return false;
}

std::vector<Integer> characteristic_polynomial(const IntegerMatrix& c) {
  if (!c.is_square()) throw Error("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = c M_{k-1} + a_{n-k+1} I, a_{n-k} = -tr(c M_k) / k.
  const std::size_t n = c.rows();
  std::vector<Integer> coeff(n + 1);
  coeff[n] = 1;
  IntegerMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = c * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[n - k + 1];
    const IntegerMatrix cm = c * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += cm(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    coeff[n - k] = -q;
  }
  return coeff;
}

BivariatePolynomial char_poly_product(const IntegerMatrix& c, Monomial x) {
  // det(1 - x c) = sum_k coeff[n - k] x^k.
  const auto coeff = characteristic_polynomial(c);
  const std::size_t n = c.rows();
  BivariatePolynomial r;
  for (std::size_t k = 0; k <= n; ++k)
    r += BivariatePolynomial::monomial(x.p * static_cast<int>(k), x.q * static_cast<int>(k),
                                       Rational(coeff[n - k]));
  return r;
}

BivariatePolynomial factor_e_character(FactorKind kind, const IntegerMatrix& c) {
  const int r = static_cast<int>(c.rows());
  switch (kind) {
    case FactorKind::elliptic:
      return char_poly_product(c, {1, 0}) * char_poly_product(c, {0, 1});
    case FactorKind::c_star: {
      const auto coeff = characteristic_polynomial(c);
      BivariatePolynomial p;
      for (int k = 0; k <= r; ++k) p += BivariatePolynomial::monomial(k, k, Rational(coeff[k]));
      return p;
    }
    case FactorKind::affine_line:
      return BivariatePolynomial::monomial(r, r);
  }
  return {};
}

BivariatePolynomial space_e_character(const SpaceDescriptor& space,
                                      std::span<const IntegerMatrix> actions) {
  if (actions.size() != space.factors().size())
    throw Error("space_e_character: expected one action per factor");
  BivariatePolynomial p(1);
  for (std::size_t i = 0; i < actions.size(); ++i)
    p = p * factor_e_character(space.factors()[i].kind, actions[i]);
  return p;
}

}  // namespace eorb::epoly
