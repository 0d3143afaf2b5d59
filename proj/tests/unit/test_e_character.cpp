#include <doctest.h>

#include "eorb/e_character.hpp"
#include "eorb/root_data.hpp"
#include "eorb/weyl.hpp"
#include "support/oracles.hpp"

using namespace eorb;
using namespace eorb::epoly;

namespace {

const Polynomial one(1);
const Polynomial u = Polynomial::u();
const Polynomial v = Polynomial::v();
const Polynomial uv = Polynomial::uv();

}  // namespace

TEST_CASE("circle counts") {
  CHECK(circle_count(FactorKind::elliptic) == 2);
  CHECK(circle_count(FactorKind::c_star) == 1);
  CHECK(circle_count(FactorKind::affine_line) == 0);
}

TEST_CASE("space descriptors") {
  CHECK(space_names() == std::vector<std::string>{"betti", "dolbeault", "derham", "abelian-surface", "mixed"});
  for (const auto& name : space_names()) CHECK(SpaceDescriptor::from_name(name).name() == name);
  CHECK_THROWS_AS(SpaceDescriptor::from_name("hodge"), Error);
  CHECK_THROWS_AS(SpaceDescriptor("empty", {}), Error);
  CHECK(SpaceDescriptor::mixed().uses_side(LatticeSide::dual));
  CHECK_FALSE(SpaceDescriptor::betti().uses_side(LatticeSide::dual));
}

TEST_CASE("char_poly_product examples") {
  CHECK(char_poly_product(IntegerMatrix::identity(2), {1, 0}) == (one - u) * (one - u));
  CHECK(char_poly_product(IntegerMatrix{{-1}}, {1, 1}) == one + uv);
  CHECK(char_poly_product(IntegerMatrix{{0, 1}, {1, 0}}, {1, 0}) == one - u * u);
  CHECK(char_poly_product(IntegerMatrix(0, 0), {1, 0}) == one);
  CHECK(characteristic_polynomial(IntegerMatrix{{0, -1}, {1, -1}}) == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("factor characters") {
  CHECK(factor_e_character(FactorKind::c_star, IntegerMatrix::identity(1)) == uv - one);
  CHECK(factor_e_character(FactorKind::c_star, IntegerMatrix{{-1}}) == uv + one);
  for (int r = 0; r <= 3; ++r) {
    const auto id = IntegerMatrix::identity(r);
    CHECK(factor_e_character(FactorKind::elliptic, id) == ((one - u) * (one - v)).pow(r));
    CHECK(factor_e_character(FactorKind::affine_line, id) == uv.pow(r));
  }
}

TEST_CASE("space characters") {
  const IntegerMatrix id1 = IntegerMatrix::identity(1);
  const std::vector<IntegerMatrix> two_id{id1, id1};
  CHECK(space_e_character(SpaceDescriptor::betti(), two_id) == (uv - one) * (uv - one));
  const auto id3 = IntegerMatrix::identity(3);
  const std::vector<IntegerMatrix> two_id3{id3, id3};
  CHECK(space_e_character(SpaceDescriptor::dolbeault(), two_id3) ==
        uv.pow(3) * ((one - u) * (one - v)).pow(3));
  const IntegerMatrix neg{{-1}};
  const std::vector<IntegerMatrix> two_neg{neg, neg};
  CHECK(space_e_character(SpaceDescriptor::abelian_surface(), two_neg) ==
        (one + u) * (one + u) * (one + v) * (one + v));
  CHECK_THROWS_AS(space_e_character(SpaceDescriptor::betti(), std::vector<IntegerMatrix>{id1}), Error);
}

TEST_CASE("property: characters match the exterior-algebra trace formula") {
  // Every element of every built-in Weyl group of rank <= 3.
  for (const auto& d : oracle::builtin_data(3)) {
    const auto g = weyl::generate_group(d.generators, 100000, d.rank());
    for (const auto& c : g.elements()) {
      const Polynomial ell = oracle::exterior_char_poly(c, 1, 0) * oracle::exterior_char_poly(c, 0, 1);
      CHECK(factor_e_character(FactorKind::elliptic, c) == ell);
      CHECK(factor_e_character(FactorKind::c_star, c) == oracle::exterior_c_star(c));
      CHECK(char_poly_product(c, {1, 1}) == oracle::exterior_char_poly(c, 1, 1));
    }
  }
}
