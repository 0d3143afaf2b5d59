#include <doctest.h>

#include <set>

#include "eorb/root_data.hpp"
#include "eorb/weyl.hpp"
#include "support/oracles.hpp"

using namespace eorb;
using namespace eorb::weyl;

namespace {

MatrixGroup group_of(const roots::RootDatum& d) { return generate_group(d.generators, 1'000'000, d.rank()); }

std::vector<std::size_t> sorted_class_sizes(const ConjugacyClassTable& t) {
  std::vector<std::size_t> s;
  for (const auto& c : t.classes) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("generate_group examples") {
  CHECK(group_of(roots::sl_quotient_datum(3, 1)).size() == 6);
  CHECK(group_of(roots::classical_datum(roots::ClassicalFamily::B, 2, roots::GroupForm::simply_connected)).size() == 8);
  const IntegerMatrix shear{{1, 1}, {0, 1}};
  try {
    generate_group(std::vector<IntegerMatrix>{shear}, 10'000);
    FAIL("expected the cap to be exceeded");
  } catch (const GroupCapExceeded& e) {
    CHECK(e.partial_count() >= 10'000);
  }
  const auto trivial = generate_group(std::vector<IntegerMatrix>{}, 10, 2);
  CHECK(trivial.size() == 1);
  CHECK(trivial.element(0) == IntegerMatrix::identity(2));
  CHECK_THROWS_AS(generate_group(std::vector<IntegerMatrix>{IntegerMatrix{{2}}}, 10), Error);
}

TEST_CASE("generated group is closed, contains identity and inverses") {
  const auto g = group_of(roots::classical_datum(roots::ClassicalFamily::C, 3, roots::GroupForm::adjoint));
  CHECK(g.size() == 48);
  CHECK(g.contains(IntegerMatrix::identity(3)));
  for (const auto& a : g.elements()) {
    CHECK(g.contains(unimodular_inverse(a)));
    for (std::size_t j = 0; j < g.size(); j += 7) CHECK(g.contains(a * g.element(j)));
  }
  const std::set<IntegerMatrix> distinct(g.elements().begin(), g.elements().end());
  CHECK(distinct.size() == g.size());
}

TEST_CASE("group enumeration is deterministic and ignores generator order") {
  auto d = roots::classical_datum(roots::ClassicalFamily::B, 3, roots::GroupForm::adjoint);
  const auto a = group_of(d);
  std::reverse(d.generators.begin(), d.generators.end());
  const auto b = group_of(d);
  CHECK(a.elements() == b.elements());
}

TEST_CASE("conjugacy class examples") {
  const auto s3 = group_of(roots::sl_quotient_datum(3, 1));
  const auto t = conjugacy_classes(s3);
  CHECK(t.classes.size() == 3);
  CHECK(sorted_class_sizes(t) == std::vector<std::size_t>{1, 2, 3});
  const auto b2 = group_of(roots::classical_datum(roots::ClassicalFamily::B, 2, roots::GroupForm::simply_connected));
  CHECK(conjugacy_classes(b2).classes.size() == 5);
  const auto trivial = generate_group(std::vector<IntegerMatrix>{}, 10, 1);
  CHECK(conjugacy_classes(trivial).classes.size() == 1);
}

TEST_CASE("property: class table partitions the group and matches brute-force conjugation") {
  for (const auto& d : oracle::builtin_data(3)) {
    const auto g = group_of(d);
    const auto t = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : t.classes) total += c.size;
    CHECK(total == g.size());
    for (std::size_t k = 0; k < t.classes.size(); ++k) {
      const auto& rep = g.element(t.classes[k].representative);
      // brute-force conjugation orbit of the representative
      std::set<IntegerMatrix> orbit;
      for (const auto& x : g.elements()) orbit.insert(x * rep * unimodular_inverse(x));
      CHECK(orbit.size() == t.classes[k].size);
      for (const auto& y : orbit) CHECK(t.class_of[*g.index_of(y)] == k);
      // representative is the least member
      for (const auto& y : orbit) CHECK(t.classes[k].representative <= *g.index_of(y));
    }
  }
}

TEST_CASE("centralizer examples and orbit-stabilizer") {
  const auto s3 = group_of(roots::sl_quotient_datum(3, 1));
  CHECK(centralizer(s3, IntegerMatrix::identity(2)).size() == 6);
  const IntegerMatrix transposition{{0, 1}, {1, 0}};
  CHECK(centralizer(s3, transposition).size() == 2);
  const IntegerMatrix three_cycle = transposition * IntegerMatrix{{1, 0}, {-1, -1}};
  CHECK(matrix_order(three_cycle) == 3);
  CHECK(centralizer(s3, three_cycle).size() == 3);
  CHECK_THROWS_AS(centralizer(s3, -IntegerMatrix::identity(2)), Error);

  for (const auto& d : oracle::builtin_data(3)) {
    const auto g = group_of(d);
    const auto t = conjugacy_classes(g);
    for (const auto& c : t.classes) {
      const auto& w = g.element(c.representative);
      const auto cent = centralizer(g, w);
      CHECK(cent.size() * c.size == g.size());
      for (const auto& x : cent.elements()) CHECK(x * w == w * x);
    }
  }
}

TEST_CASE("property: Weyl group orders and class counts") {
  using roots::ClassicalFamily;
  using roots::GroupForm;
  std::size_t factorial = 1;
  for (int n = 2; n <= 5; ++n) {
    factorial *= static_cast<std::size_t>(n);
    const auto sl = group_of(roots::sl_quotient_datum(n, 1));
    CHECK(sl.size() == factorial);
    CHECK(conjugacy_classes(sl).classes.size() == oracle::partition_numbers(n)[n]);
  }
  // bipartition counts 5, 10, 20 and D-type class counts 5 (= S_4), 13
  const std::size_t bipartitions[] = {0, 0, 5, 10, 20};
  factorial = 1;
  for (int n = 2; n <= 4; ++n) {
    factorial *= static_cast<std::size_t>(n);
    for (auto family : {ClassicalFamily::B, ClassicalFamily::C})
      for (auto form : {GroupForm::simply_connected, GroupForm::adjoint}) {
        const auto g = group_of(roots::classical_datum(family, n, form));
        CHECK(g.size() == (std::size_t{1} << n) * factorial);
        CHECK(conjugacy_classes(g).classes.size() == bipartitions[n]);
      }
  }
  const std::size_t d_classes[] = {0, 0, 0, 5, 13};
  for (int n = 3; n <= 4; ++n)
    for (auto form : {GroupForm::simply_connected, GroupForm::adjoint}) {
      const auto g = group_of(roots::classical_datum(ClassicalFamily::D, n, form));
      CHECK(g.size() == (n == 3 ? 24u : 192u));
      CHECK(conjugacy_classes(g).classes.size() == d_classes[n]);
    }
}
