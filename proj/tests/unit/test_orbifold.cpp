#include <doctest.h>

#include "eorb/orbifold.hpp"
#include "support/oracles.hpp"

using namespace eorb;
using namespace eorb::orbifold;
using epoly::SpaceDescriptor;

namespace {

const Polynomial one(1);
const Polynomial u = Polynomial::u();
const Polynomial v = Polynomial::v();
const Polynomial uv = Polynomial::uv();

// Long cycle e_i -> e_{i+1} on the SL(n) lattice, in basis coordinates.
IntegerMatrix long_cycle(const WeylAction& action, int n) {
  for (const auto& w : action.group().elements())
    if (oracle::cycle_type(oracle::ambient_permutation(action.datum(), w)) == std::vector<int>{n}) return w;
  throw std::logic_error("no long cycle");
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("fermionic shift examples") {
  CHECK(fermionic_shift(IntegerMatrix::identity(3)) == 0);
  for (int r = 1; r <= 4; ++r) CHECK(fermionic_shift(-IntegerMatrix::identity(r)) == r);
  for (int n = 2; n <= 6; ++n) {
    const WeylAction action(roots::sl_quotient_datum(n, 1), 100000);
    CHECK(fermionic_shift(long_cycle(action, n)) == n - 1);
  }
  CHECK(fermionic_shift(IntegerMatrix(0, 0)) == 0);
}

TEST_CASE("direct shift oracle examples") {
  CHECK(direct_shift_oracle(IntegerMatrix::identity(2)) == 0);
  const WeylAction a2(roots::sl_quotient_datum(3, 1), 100);
  CHECK(direct_shift_oracle(long_cycle(a2, 3)) == 2);
  const WeylAction b3(roots::classical_datum(roots::ClassicalFamily::B, 3, roots::GroupForm::simply_connected), 1000);
  for (const auto& w : b3.group().elements()) CHECK(direct_shift_oracle(w) == fermionic_shift(w));
  CHECK_THROWS_AS(direct_shift_oracle(IntegerMatrix{{1, 1}, {0, 1}}), Error);
}

TEST_CASE("space shift requires an integral value") {
  const SpaceDescriptor one_factor("single", {{epoly::FactorKind::c_star, epoly::LatticeSide::primal}});
  CHECK_THROWS_AS(space_shift(one_factor, IntegerMatrix{{-1}}), Error);
  CHECK(space_shift(SpaceDescriptor::betti(), IntegerMatrix{{-1}}) == 1);
}

TEST_CASE("fixed point data examples") {
  const auto neg = fixed_point_data(IntegerMatrix{{-1}});
  CHECK(neg.pi0.divisors() == ints({2}));
  CHECK(neg.shift == 1);
  CHECK(neg.fixed_basis.cols() == 0);

  const auto id = fixed_point_data(IntegerMatrix::identity(3));
  CHECK(id.pi0.is_trivial());
  CHECK(id.shift == 0);
  CHECK(id.fixed_basis == IntegerMatrix::identity(3));

  const WeylAction a2(roots::sl_quotient_datum(3, 1), 100);
  const auto cyc = fixed_point_data(long_cycle(a2, 3));
  CHECK(cyc.pi0.divisors() == ints({3}));
  CHECK(cyc.shift == 2);
}

TEST_CASE("SL(2) Betti by hand enumeration over W = Z/2") {
  const WeylAction sl2(roots::sl_quotient_datum(2, 1), 10);
  const auto betti = SpaceDescriptor::betti();
  // w = 1: C(w) = W; c = 1 gives (uv - 1)^2, c = -1 gives (uv + 1)^2.
  const auto id = class_contribution(sl2, betti, IntegerMatrix{{1}});
  CHECK(id.average == ((uv - one) * (uv - one) + (uv + one) * (uv + one)) * Rational(1, 2));
  CHECK(id.average == uv * uv + one);
  CHECK(id.shift == 0);
  // w = -1: four fixed points (Z/2 per C* factor), each fixed by both c, shift 1.
  const auto neg = class_contribution(sl2, betti, IntegerMatrix{{-1}});
  CHECK(neg.average == Polynomial(4));
  CHECK(neg.weighted == Polynomial(4) * uv);
  CHECK(orbifold_e_polynomial(sl2, betti).total == uv * uv + Polynomial(4) * uv + one);
}

TEST_CASE("SL(2) Dolbeault by hand enumeration") {
  // w = 1: average of uv(1-u)(1-v) and uv(1+u)(1+v) = uv + (uv)^2.
  // w = -1: pi0 = Z/2 with d = 2 for the elliptic factor, 4 points, shift 1.
  const auto r = orbifold_e_polynomial(roots::sl_quotient_datum(2, 1), SpaceDescriptor::dolbeault());
  CHECK(r.classes.size() == 2);
  CHECK(r.classes[0].average == uv + uv * uv);
  CHECK(r.total == uv * uv + Polynomial(5) * uv);
}

TEST_CASE("rank-0 datum gives 1") {
  for (const auto& name : epoly::space_names()) {
    const auto r = orbifold_e_polynomial(roots::trivial_datum(), SpaceDescriptor::from_name(name));
    CHECK(r.total == one);
    CHECK(r.group_order == 1);
  }
}

TEST_CASE("duality check examples") {
  const auto sl2 = duality_check(roots::sl_quotient_datum(2, 1));
  CHECK(sl2.consistent);
  REQUIRE(sl2.classes.size() == 2);
  CHECK(sl2.classes[0].primal_divisors.empty());
  CHECK(sl2.classes[1].primal_divisors == ints({2}));
  CHECK(sl2.classes[1].dual_divisors == ints({2}));
  for (const auto& [a, b] : sl2.classes[1].fixed_counts) {
    CHECK(a == 2);
    CHECK(b == 2);
  }
  const auto sl3 = duality_check(roots::sl_quotient_datum(3, 1));
  CHECK(sl3.consistent);
  bool saw_three = false;
  for (const auto& c : sl3.classes)
    if (c.primal_divisors == ints({3})) {
      saw_three = true;
      CHECK(c.dual_divisors == ints({3}));
    }
  CHECK(saw_three);
}

TEST_CASE("mirror check on small cases") {
  for (const auto& name : epoly::space_names()) {
    const auto space = SpaceDescriptor::from_name(name);
    const auto r = mirror_check(roots::sl_quotient_datum(4, 2), space);
    CHECK(r.equal);
    CHECK(r.primal.total == r.dual.total);
    const auto b3 = mirror_check(roots::classical_datum(roots::ClassicalFamily::B, 3, roots::GroupForm::simply_connected), space);
    CHECK(b3.equal);
    for (const auto& p : b3.pairs) CHECK(p.difference.is_zero());
  }
  const auto g2 = roots::load_datum(std::string(EORB_DATA_DIR) + "/g2.datum");
  CHECK(mirror_check(g2, SpaceDescriptor::abelian_surface()).equal);
}

TEST_CASE("property: D3 matches SL(4) and its adjoint form matches PGL(4)") {
  using roots::ClassicalFamily;
  using roots::GroupForm;
  for (const auto& name : epoly::space_names()) {
    const auto space = SpaceDescriptor::from_name(name);
    CHECK(orbifold_e_polynomial(roots::classical_datum(ClassicalFamily::D, 3, GroupForm::simply_connected), space).total ==
          orbifold_e_polynomial(roots::sl_quotient_datum(4, 1), space).total);
    CHECK(orbifold_e_polynomial(roots::classical_datum(ClassicalFamily::D, 3, GroupForm::adjoint), space).total ==
          orbifold_e_polynomial(roots::sl_quotient_datum(4, 4), space).total);
  }
}

TEST_CASE("property: shift identities on every element of the built-ins") {
  for (const auto& d : oracle::builtin_data(4)) {
    CAPTURE(d.label);
    const WeylAction action(d, 100000);
    for (const auto& w : action.group().elements()) {
      const int f = fermionic_shift(w);
      CHECK(f == direct_shift_oracle(w));
      CHECK(f == fermionic_shift(inverse_transpose(w)));
      const auto snf = lattice::smith_normal_form(w - IntegerMatrix::identity(w.rows()));
      CHECK(static_cast<std::size_t>(f) == snf.rank());
      CHECK(static_cast<std::size_t>(f) == d.rank() - lattice::fixed_sublattice(w).cols());
    }
  }
}

TEST_CASE("property: SL(n) shift is n minus the number of cycles") {
  for (int n = 2; n <= 7; ++n) {
    const WeylAction action(roots::sl_quotient_datum(n, 1), 100000);
    for (const auto& w : action.group().elements()) {
      const auto cycles = oracle::cycle_type(oracle::ambient_permutation(action.datum(), w));
      CHECK(fermionic_shift(w) == n - static_cast<int>(cycles.size()));
    }
  }
}

TEST_CASE("property: contributions are conjugation invariant") {
  const auto space = SpaceDescriptor::mixed();
  for (const auto& d : oracle::builtin_data(3)) {
    CAPTURE(d.label);
    const WeylAction action(d, 100000);
    const auto& g = action.group();
    for (std::size_t k = 0; k < action.classes().classes.size(); ++k) {
      const auto& w = action.representative(k);
      const auto base = class_contribution(action, space, w);
      for (std::size_t j = 0; j < g.size(); j += 3) {
        const auto& x = g.element(j);
        const auto conj = class_contribution(action, space, x * w * unimodular_inverse(x));
        CHECK(conj.weighted == base.weighted);
        CHECK(conj.pi0_divisors == base.pi0_divisors);
      }
    }
  }
}

TEST_CASE("property: thread count does not change the result") {
  const auto d = roots::classical_datum(roots::ClassicalFamily::C, 4, roots::GroupForm::adjoint);
  for (const auto& name : epoly::space_names()) {
    const auto space = SpaceDescriptor::from_name(name);
    const auto serial = orbifold_e_polynomial(d, space, {10'000'000, 1});
    const auto parallel = orbifold_e_polynomial(d, space, {10'000'000, 8});
    CHECK(serial.total == parallel.total);
    REQUIRE(serial.classes.size() == parallel.classes.size());
    for (std::size_t k = 0; k < serial.classes.size(); ++k) {
      CHECK(serial.classes[k].representative == parallel.classes[k].representative);
      CHECK(serial.classes[k].weighted == parallel.classes[k].weighted);
    }
  }
}

TEST_CASE("property: gram rescaling changes no output") {
  for (const auto& d : oracle::builtin_data(3)) {
    CAPTURE(d.label);
    for (const Rational factor : {Rational(2), Rational(1, 3)}) {
      const auto scaled = roots::rescale_gram(d, factor);
      for (const auto& name : epoly::space_names()) {
        const auto space = SpaceDescriptor::from_name(name);
        const auto a = mirror_check(d, space);
        const auto b = mirror_check(scaled, space);
        CHECK(a.primal.total == b.primal.total);
        CHECK(a.dual.total == b.dual.total);
        CHECK(a.equal == b.equal);
      }
      CHECK(duality_check(d).consistent == duality_check(scaled).consistent);
    }
  }
}

TEST_CASE("property: totals are integral and positive at u = v = 1 on compact spaces") {
  for (const auto& d : oracle::builtin_data(3))
    for (const auto& name : epoly::space_names()) {
      const auto total = orbifold_e_polynomial(d, SpaceDescriptor::from_name(name)).total;
      CHECK(total.has_integer_coefficients());
      if (name == "betti" || name == "abelian-surface") CHECK(total.evaluate(1, 1) > 0);
    }
}

TEST_CASE("cap exceeded propagates") {
  CHECK_THROWS_AS(WeylAction(roots::classical_datum(roots::ClassicalFamily::B, 4, roots::GroupForm::adjoint), 100),
                  weyl::GroupCapExceeded);
}
