#include "eorb/orbifold.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace eorb::orbifold {

using epoly::FactorKind;
using epoly::LatticeSide;
using epoly::SpaceDescriptor;

namespace {

IntegerMatrix minus_identity(const IntegerMatrix& w) {
  return w - IntegerMatrix::identity(w.rows());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  const unsigned n = std::min<std::size_t>(threads, count);
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

// Coefficients (low to high) of the k-th cyclotomic polynomial, obtained by
// dividing t^k - 1 by Phi_e for every proper divisor e of k.
std::vector<Integer> cyclotomic(std::size_t k) {
  std::vector<Integer> p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (std::size_t e = 1; e < k; ++e) {
    if (k % e != 0) continue;
    const auto d = cyclotomic(e);  // monic
    std::vector<Integer> q(p.size() - d.size() + 1, 0);
    for (std::size_t s = q.size(); s-- > 0;) {
      const Integer lead = p[s + d.size() - 1];
      q[s] = lead;
      for (std::size_t j = 0; j < d.size(); ++j) p[s + j] -= lead * d[j];
    }
    for (const auto& r : p)
      if (r != 0) throw Error("cyclotomic: inexact division");
    p = std::move(q);
  }
  return p;
}

IntegerMatrix evaluate_at(const std::vector<Integer>& poly, const IntegerMatrix& w) {
  const std::size_t n = w.rows();
  IntegerMatrix result(n, n);
  for (std::size_t i = poly.size(); i-- > 0;) {
    result = result * w;
    for (std::size_t j = 0; j < n; ++j) result(j, j) += poly[i];
  }
  return result;
}

}  // namespace

int fermionic_shift(const IntegerMatrix& w) {
  if (w.rows() == 0) return 0;
  return static_cast<int>(rank(minus_identity(w)));
}

int direct_shift_oracle(const IntegerMatrix& w) {
  const std::size_t n = w.rows();
  if (n == 0) return 0;
  const std::size_t order = matrix_order(w);
  if (order == 0) throw Error("direct_shift_oracle: matrix does not have finite order");
  Rational total = 0;
  std::size_t accounted = 0;
  for (std::size_t k = 1; k <= order; ++k) {
    if (order % k != 0) continue;
    // Eigenvalues that are primitive k-th roots e^{2 pi i j / k}, gcd(j, k) = 1,
    // each with the same multiplicity since the characteristic polynomial is rational.
    const std::size_t kernel_dim = n - rank(evaluate_at(cyclotomic(k), w));
    if (kernel_dim == 0) continue;
    std::size_t phi = 0;
    Rational angle_sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), Integer(static_cast<unsigned long>(k)).get_mpz_t(), j);
      if (g != 1) continue;
      ++phi;
      angle_sum += ratio(static_cast<long>(j), static_cast<long>(k));
    }
    if (kernel_dim % phi != 0) throw Error("direct_shift_oracle: inconsistent eigenvalue count");
    total += angle_sum * Rational(static_cast<long>(kernel_dim / phi));
    accounted += kernel_dim;
  }
  if (accounted != n) throw Error("direct_shift_oracle: matrix is not diagonalizable over C");
  total *= 2;
  if (total.get_den() != 1) throw Error("direct_shift_oracle: fermionic shift is not integral");
  return static_cast<int>(total.get_num().get_si());
}

int space_shift(const SpaceDescriptor& space, const IntegerMatrix& w) {
  const int copies = static_cast<int>(space.factors().size());
  const int r = fermionic_shift(w);
  if ((copies * r) % 2 != 0)
    throw Error("space '" + space.name() + "': fermionic shift " + std::to_string(copies * r) +
                "/2 is not an integer");
  return copies * r / 2;
}

FixedPointData fixed_point_data(const IntegerMatrix& w) {
  FixedPointData f;
  f.w = w;
  if (w.rows() == 0) return f;
  f.fixed_basis = lattice::fixed_sublattice(w);
  f.pi0 = lattice::torsion_of_cokernel(minus_identity(w));
  f.shift = fermionic_shift(w);
  return f;
}

WeylAction::WeylAction(roots::RootDatum datum, std::size_t cap)
    : datum_(std::move(datum)),
      group_(weyl::generate_group(datum_.generators, cap, datum_.rank())),
      classes_(weyl::conjugacy_classes(group_)) {}

namespace {

struct SideData {
  IntegerMatrix w;
  IntegerMatrix fixed_basis;
  std::optional<lattice::CokernelTorsion> torsion;
};

SideData side_data(const IntegerMatrix& w) {
  SideData s{w, lattice::fixed_sublattice(w), std::nullopt};
  s.torsion.emplace(minus_identity(w));
  return s;
}

}  // namespace

ClassContribution class_contribution(const SpaceDescriptor& space, const IntegerMatrix& w,
                                     const weyl::MatrixGroup& centralizer, std::size_t class_size) {
  ClassContribution out;
  out.representative = w;
  out.class_size = class_size;
  out.centralizer_order = centralizer.size();
  if (w.rows() == 0) {
    out.average = Polynomial(1);
    out.weighted = Polynomial(1);
    return out;
  }

  const IntegerMatrix w_dual = inverse_transpose(w);
  if (fermionic_shift(w) != fermionic_shift(w_dual))
    throw Error("fermionic shift differs between the lattice and its dual");
  out.shift = space_shift(space, w);

  std::optional<SideData> primal, dual;
  if (space.uses_side(LatticeSide::primal)) primal = side_data(w);
  if (space.uses_side(LatticeSide::dual)) dual = side_data(w_dual);
  out.pi0_divisors = (primal ? *primal : side_data(w)).torsion->group().divisors();

  Polynomial sum;
  for (const auto& c : centralizer.elements()) {
    struct Restricted {
      IntegerMatrix action;
      Integer fixed;
    };
    auto restrict_side = [&](const std::optional<SideData>& s, const IntegerMatrix& cs) {
      std::optional<Restricted> r;
      if (!s) return r;
      r.emplace(Restricted{lattice::restrict_action(cs, s->fixed_basis),
                           lattice::fixed_count(s->torsion->induced_automorphism(cs))});
      return r;
    };
    const auto on_primal = restrict_side(primal, c);
    const auto on_dual = dual ? restrict_side(dual, inverse_transpose(c)) : std::nullopt;

    Polynomial term(1);
    for (const auto& factor : space.factors()) {
      const Restricted& r = factor.side == LatticeSide::primal ? *on_primal : *on_dual;
      Integer components;
      mpz_pow_ui(components.get_mpz_t(), r.fixed.get_mpz_t(),
                 static_cast<unsigned long>(epoly::circle_count(factor.kind)));
      term = term * epoly::factor_e_character(factor.kind, r.action) * Rational(components);
    }
    sum += term;
  }
  out.average = sum * ratio(1, static_cast<long>(centralizer.size()));
  out.weighted = out.average * Polynomial::monomial(out.shift, out.shift);
  return out;
}

ClassContribution class_contribution(const WeylAction& action, const SpaceDescriptor& space,
                                     const IntegerMatrix& w) {
  const auto idx = action.group().index_of(w);
  if (!idx) throw Error("class_contribution: element is not in the Weyl group");
  const auto cls = action.classes().class_of[*idx];
  return class_contribution(space, w, weyl::centralizer(action.group(), w),
                            action.classes().classes[cls].size);
}

OrbifoldReport orbifold_e_polynomial(const WeylAction& action, const SpaceDescriptor& space,
                                     const EngineOptions& options) {
  OrbifoldReport report;
  report.datum_label = action.datum().label;
  report.space = space.name();
  report.group_order = action.group().size();
  const auto& classes = action.classes().classes;
  report.classes.resize(classes.size());
  parallel_for(classes.size(), options.threads, [&](std::size_t i) {
    const IntegerMatrix& w = action.representative(i);
    report.classes[i] =
        class_contribution(space, w, weyl::centralizer(action.group(), w), classes[i].size);
  });
  for (const auto& c : report.classes) report.total += c.weighted;
  if (!report.total.has_integer_coefficients())
    throw Error("orbifold E-polynomial has non-integral coefficients: " +
                epoly::to_text(report.total));
  return report;
}

OrbifoldReport orbifold_e_polynomial(const roots::RootDatum& datum, const SpaceDescriptor& space,
                                     const EngineOptions& options) {
  return orbifold_e_polynomial(WeylAction(datum, options.cap), space, options);
}

MirrorReport mirror_check(const roots::RootDatum& datum, const SpaceDescriptor& space,
                          const EngineOptions& options) {
  const WeylAction primal(datum, options.cap);
  const WeylAction dual(roots::dual_datum(datum), options.cap);
  MirrorReport report;
  report.primal = orbifold_e_polynomial(primal, space, options);
  report.dual = orbifold_e_polynomial(dual, space, options);
  report.equal = report.primal.total == report.dual.total;

  std::vector<bool> hit(report.dual.classes.size(), false);
  for (std::size_t i = 0; i < report.primal.classes.size(); ++i) {
    const IntegerMatrix matched = inverse_transpose(primal.representative(i));
    const auto idx = dual.group().index_of(matched);
    if (!idx) throw Error("mirror_check: dual group does not contain w^{-T}");
    const std::size_t j = dual.classes().class_of[*idx];
    if (hit[j]) throw Error("mirror_check: class matching is not a bijection");
    hit[j] = true;
    PairDifference pd{i, j, report.primal.classes[i].weighted - report.dual.classes[j].weighted};
    if (!pd.difference.is_zero()) report.equal = false;
    report.pairs.push_back(std::move(pd));
  }
  if (report.pairs.size() != report.dual.classes.size()) report.equal = false;
  return report;
}

DualityReport duality_check(const roots::RootDatum& datum, const EngineOptions& options) {
  const WeylAction action(datum, options.cap);
  DualityReport report;
  report.datum_label = datum.label;
  const auto& classes = action.classes().classes;
  report.classes.resize(classes.size());
  parallel_for(classes.size(), options.threads, [&](std::size_t i) {
    DualityRecord& rec = report.classes[i];
    const IntegerMatrix& w = action.representative(i);
    rec.representative = w;
    if (w.rows() == 0) {
      rec.centralizer_order = 1;
      rec.fixed_counts.emplace_back(1, 1);
      rec.agrees = true;
      return;
    }
    const IntegerMatrix w_dual = inverse_transpose(w);
    const lattice::CokernelTorsion primal(minus_identity(w));
    const lattice::CokernelTorsion dual(minus_identity(w_dual));
    rec.primal_divisors = primal.group().divisors();
    rec.dual_divisors = dual.group().divisors();
    rec.agrees = primal.group().order() == dual.group().order();
    const auto cent = weyl::centralizer(action.group(), w);
    rec.centralizer_order = cent.size();
    for (const auto& c : cent.elements()) {
      Integer a = lattice::fixed_count(primal.induced_automorphism(c));
      Integer b = lattice::fixed_count(dual.induced_automorphism(inverse_transpose(c)));
      if (a != b) rec.agrees = false;
      rec.fixed_counts.emplace_back(std::move(a), std::move(b));
    }
  });
  report.consistent = true;
  for (const auto& r : report.classes) report.consistent = report.consistent && r.agrees;
  return report;
}

}  // namespace eorb::orbifold
