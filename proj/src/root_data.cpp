#include "eorb/root_data.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "eorb/lattice.hpp"
#include "eorb/weyl.hpp"

namespace eorb::roots {

namespace {

RationalMatrix real_basis(const RootDatum& d) {
  RationalMatrix b = to_rational(d.basis);
  const Rational inv = Rational(1) / Rational(d.denominator);
  b *= inv;
  return b;
}

// Writes a rational ambient basis as (integer matrix, smallest common denominator).
void set_real_basis(RootDatum& d, const RationalMatrix& b) {
  Integer den = 1;
  for (const auto& e : b.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
  d.basis = to_integer(b * Rational(den));
  d.denominator = den;
}

RationalMatrix ambient_gram(const RootDatum& d) {
  const RationalMatrix b = real_basis(d);
  return b.transpose() * b;
}

// Builds a datum from an ambient lattice (scaled generators / den), the
// ambient Weyl generators, and the standard Euclidean form.
RootDatum from_ambient(std::string label, const IntegerMatrix& scaled_generators,
                       const Integer& den, const std::vector<IntegerMatrix>& ambient_weyl) {
  RootDatum d;
  d.label = std::move(label);
  RationalMatrix b = to_rational(lattice::column_hermite_basis(scaled_generators));
  b *= Rational(1) / Rational(den);
  set_real_basis(d, b);
  const RationalMatrix rb = real_basis(d);
  const RationalMatrix bt = rb.transpose();
  const RationalMatrix left_inverse = inverse(bt * rb) * bt;
  for (const auto& g : ambient_weyl)
    d.generators.push_back(to_integer(left_inverse * to_rational(g) * rb));
  d.gram = ambient_gram(d);
  return d;
}

IntegerMatrix transposition(int n, int i, int j) {
  IntegerMatrix p = IntegerMatrix::identity(n);
  p(i, i) = 0;
  p(j, j) = 0;
  p(i, j) = 1;
  p(j, i) = 1;
  return p;
}

bool is_positive_definite(const RationalMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (determinant(g.submatrix(idx, idx)) <= 0) return false;
  }
  return true;
}

}  // namespace

std::string to_string(ClassicalFamily family) {
  switch (family) {
    case ClassicalFamily::B: return "B";
    case ClassicalFamily::C: return "C";
    case ClassicalFamily::D: return "D";
  }
  return "?";
}

std::string to_string(GroupForm form) {
  return form == GroupForm::simply_connected ? "simply_connected" : "adjoint";
}

RootDatum sl_quotient_datum(int n, int m) {
  if (n < 2) throw DatumError("sl_quotient_datum: n must be at least 2");
  if (m < 1 || n % m != 0)
    throw DatumError("sl_quotient_datum: m = " + std::to_string(m) + " does not divide n = " +
                     std::to_string(n));
  // m * (Z^n + Z (1/m, ..., 1/m)) is spanned by m e_i and the all-ones vector.
  IntegerMatrix gens(n, n + 1);
  for (int i = 0; i < n; ++i) {
    gens(i, i) = m;
    gens(i, n) = 1;
  }
  const IntegerMatrix full = lattice::column_hermite_basis(gens);
  IntegerMatrix sum_row(1, n);
  for (int i = 0; i < n; ++i) sum_row(0, i) = 1;
  const IntegerMatrix kernel = lattice::integer_kernel(sum_row * full);
  const IntegerMatrix scaled = full * kernel;

  std::vector<IntegerMatrix> weyl;
  for (int i = 0; i + 1 < n; ++i) weyl.push_back(transposition(n, i, i + 1));
  std::string label = "SL(" + std::to_string(n) + ")";
  if (m > 1) label += "/Z" + std::to_string(m);
  return from_ambient(label, scaled, m, weyl);
}

RootDatum classical_datum(ClassicalFamily family, int n, GroupForm form) {
  const int min_rank = family == ClassicalFamily::D ? 3 : 2;
  if (n < min_rank)
    throw DatumError("classical_datum: rank " + std::to_string(n) + " is out of range for type " +
                     to_string(family));

  // Lattices in Z^n coordinates: integral, sum-even, or with half-integral vectors.
  enum class Shape { integral, even, half };
  Shape shape{};
  switch (family) {
    case ClassicalFamily::B:
      shape = form == GroupForm::simply_connected ? Shape::even : Shape::integral;
      break;
    case ClassicalFamily::C:
      shape = form == GroupForm::simply_connected ? Shape::integral : Shape::half;
      break;
    case ClassicalFamily::D:
      shape = form == GroupForm::simply_connected ? Shape::even : Shape::half;
      break;
  }

  IntegerMatrix gens;
  Integer den = 1;
  if (shape == Shape::integral) {
    gens = IntegerMatrix::identity(n);
  } else if (shape == Shape::even) {
    gens = IntegerMatrix(n, n);
    for (int i = 0; i + 1 < n; ++i) {
      gens(i, i) = 1;
      gens(i + 1, i) = -1;
    }
    gens(n - 2, n - 1) = 1;
    gens(n - 1, n - 1) = 1;
  } else {
    gens = IntegerMatrix(n, n + 1);
    for (int i = 0; i < n; ++i) {
      gens(i, i) = 2;
      gens(i, n) = 1;
    }
    den = 2;
  }

  std::vector<IntegerMatrix> weyl;
  for (int i = 0; i + 1 < n; ++i) weyl.push_back(transposition(n, i, i + 1));
  IntegerMatrix last = IntegerMatrix::identity(n);
  if (family == ClassicalFamily::D) {
    last(n - 2, n - 2) = 0;
    last(n - 1, n - 1) = 0;
    last(n - 2, n - 1) = -1;
    last(n - 1, n - 2) = -1;
  } else {
    last(n - 1, n - 1) = -1;
  }
  weyl.push_back(last);

  std::string label = to_string(family) + std::to_string(n) + " " + to_string(form);
  return from_ambient(label, gens, den, weyl);
}

RootDatum trivial_datum() {
  RootDatum d;
  d.label = "trivial";
  d.basis = IntegerMatrix(0, 0);
  d.gram = RationalMatrix(0, 0);
  return d;
}

RootDatum dual_datum(const RootDatum& datum) {
  RootDatum d;
  d.label = "dual of " + datum.label;
  if (datum.rank() == 0) {
    d.basis = datum.basis;
    d.gram = datum.gram;
    return d;
  }
  const RationalMatrix gram_inv = inverse(datum.gram);
  set_real_basis(d, real_basis(datum) * gram_inv);
  for (const auto& g : datum.generators) d.generators.push_back(inverse_transpose(g));
  d.gram = gram_inv;
  return d;
}

RootDatum rescale_gram(const RootDatum& datum, const Rational& factor) {
  if (factor <= 0) throw DatumError("rescale_gram: factor must be positive");
  RootDatum d = datum;
  d.gram *= factor;
  return d;
}

void validate(const RootDatum& d) {
  const std::size_t r = d.rank();
  if (d.denominator <= 0) throw DatumError("denominator must be positive");
  if (d.gram.rows() != r || d.gram.cols() != r)
    throw DatumError("gram must be " + std::to_string(r) + "x" + std::to_string(r));
  if (!(d.gram == d.gram.transpose())) throw DatumError("gram is not symmetric");
  if (!is_positive_definite(d.gram)) throw DatumError("gram is not positive definite");
  if (r > 0 && rank(d.basis) != r) throw DatumError("basis vectors are linearly dependent");
  for (std::size_t k = 0; k < d.generators.size(); ++k) {
    const auto& g = d.generators[k];
    const std::string name = "generator " + std::to_string(k + 1);
    if (g.rows() != r || g.cols() != r)
      throw DatumError(name + " must be " + std::to_string(r) + "x" + std::to_string(r));
    if (!is_unimodular(g)) throw DatumError(name + " is not unimodular");
    const RationalMatrix gq = to_rational(g);
    if (!(gq.transpose() * d.gram * gq == d.gram))
      throw DatumError(name + " does not preserve the gram form");
    if (matrix_order(g) == 0) throw DatumError(name + " does not have finite order");
  }
}

RationalMatrix pairing_matrix(const RootDatum& a, const RootDatum& b) {
  // Both bases are written in a's coordinates over Q, then paired by a.gram.
  const RationalMatrix ra = real_basis(a);
  const RationalMatrix rb = real_basis(b);
  const RationalMatrix at = ra.transpose();
  const RationalMatrix coords = inverse(at * ra) * (at * rb);
  return a.gram * coords;
}

std::optional<IntegerMatrix> lattice_transition(const RootDatum& a, const RootDatum& b) {
  if (a.rank() != b.rank() || a.ambient_dimension() != b.ambient_dimension()) return std::nullopt;
  if (a.rank() == 0) return IntegerMatrix(0, 0);
  const RationalMatrix ra = real_basis(a);
  const RationalMatrix rb = real_basis(b);
  const RationalMatrix at = ra.transpose();
  const RationalMatrix p = inverse(at * ra) * (at * rb);
  if (!(ra * p == rb)) return std::nullopt;
  for (const auto& e : p.entries())
    if (e.get_den() != 1) return std::nullopt;
  IntegerMatrix pi = to_integer(p);
  if (!is_unimodular(pi)) return std::nullopt;
  return pi;
}

Integer lattice_index(const RootDatum& sub, const RootDatum& super) {
  const RationalMatrix rs = real_basis(super);
  const RationalMatrix rsub = real_basis(sub);
  const RationalMatrix st = rs.transpose();
  const RationalMatrix p = inverse(st * rs) * (st * rsub);
  if (!(rs * p == rsub)) throw DatumError("lattice_index: spans differ");
  for (const auto& e : p.entries())
    if (e.get_den() != 1)
      throw DatumError("lattice_index: " + sub.label + " is not contained in " + super.label);
  Integer det = determinant(to_integer(p));
  if (det == 0) throw DatumError("lattice_index: sublattice has lower rank");
  return abs(det);
}

bool equivalent(const RootDatum& a, const RootDatum& b, std::size_t cap) {
  const auto p = lattice_transition(a, b);
  if (!p) return false;
  const RationalMatrix pq = to_rational(*p);
  if (!(pq.transpose() * a.gram * pq == b.gram)) return false;
  const IntegerMatrix p_inv = unimodular_inverse(*p);
  std::vector<IntegerMatrix> transported;
  for (const auto& g : b.generators) transported.push_back(*p * g * p_inv);
  const auto ga = weyl::generate_group(a.generators, cap);
  const auto gb = weyl::generate_group(transported, cap);
  if (ga.size() != gb.size()) return false;
  for (const auto& e : gb.elements())
    if (!ga.contains(e)) return false;
  return true;
}

namespace {

std::string strip_comment(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Integer parse_integer(const std::string& token, int line) {
  Integer v;
  if (v.set_str(token, 10) != 0)
    throw DatumError("line " + std::to_string(line) + ": bad integer '" + token + "'");
  return v;
}

Rational parse_rational(const std::string& token, int line) {
  Rational v;
  if (v.set_str(token, 10) != 0 || v.get_den() == 0)
    throw DatumError("line " + std::to_string(line) + ": bad rational '" + token + "'");
  v.canonicalize();
  return v;
}

}  // namespace

RootDatum parse_datum(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = strip_comment(raw);
    if (!s.empty()) lines.emplace_back(number, s);
  }

  std::optional<std::size_t> rank;
  RootDatum d;
  struct Row {
    int line;
    std::vector<std::string> tokens;
  };
  std::optional<std::vector<Row>> basis_rows, gram_rows;
  std::vector<std::vector<Row>> generator_rows;
  bool have_denominator = false;

  auto tokens_of = [](const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> t;
    for (std::string w; is >> w;) t.push_back(w);
    return t;
  };
  auto need_rank = [&](int line) {
    if (!rank) throw DatumError("line " + std::to_string(line) + ": 'rank' must come first");
    return *rank;
  };
  auto take_rows = [&](std::size_t& pos, std::size_t count, int line) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < count; ++k) {
      if (pos >= lines.size())
        throw DatumError("line " + std::to_string(line) + ": expected " + std::to_string(count) +
                         " matrix rows");
      rows.push_back({lines[pos].first, tokens_of(lines[pos].second)});
      ++pos;
    }
    return rows;
  };

  for (std::size_t pos = 0; pos < lines.size();) {
    const auto [line, text] = lines[pos++];
    const auto tok = tokens_of(text);
    const std::string& key = tok[0];
    if (key == "label") {
      d.label = strip_comment(text.substr(5));
    } else if (key == "rank") {
      if (tok.size() != 2) throw DatumError("line " + std::to_string(line) + ": rank <n>");
      rank = parse_integer(tok[1], line).get_ui();
    } else if (key == "denominator") {
      if (tok.size() != 2) throw DatumError("line " + std::to_string(line) + ": denominator <n>");
      d.denominator = parse_integer(tok[1], line);
      have_denominator = true;
    } else if (key == "basis") {
      basis_rows = take_rows(pos, need_rank(line), line);
    } else if (key == "gram") {
      gram_rows = take_rows(pos, need_rank(line), line);
    } else if (key == "generators") {
      if (tok.size() != 2)
        throw DatumError("line " + std::to_string(line) + ": generators <count>");
      const auto count = parse_integer(tok[1], line).get_ui();
      for (unsigned long k = 0; k < count; ++k)
        generator_rows.push_back(take_rows(pos, need_rank(line), line));
    } else {
      throw DatumError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }

  if (!rank) throw DatumError("missing 'rank'");
  if (basis_rows)
    for (const auto& row : *basis_rows)
      for (const auto& t : row.tokens) parse_integer(t, row.line);
  if (!basis_rows && *rank > 0) throw DatumError("missing 'basis'");
  if (!gram_rows && *rank > 0) throw DatumError("missing 'gram'");
  if (!have_denominator) d.denominator = 1;
  const std::size_t r = *rank;

  const std::size_t ambient = r == 0 ? 0 : (*basis_rows)[0].tokens.size();
  d.basis = IntegerMatrix(ambient, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto& row = (*basis_rows)[j];
    if (row.tokens.size() != ambient)
      throw DatumError("line " + std::to_string(row.line) + ": basis rows have different lengths");
    for (std::size_t i = 0; i < ambient; ++i) d.basis(i, j) = parse_integer(row.tokens[i], row.line);
  }
  d.gram = RationalMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = (*gram_rows)[i];
    if (row.tokens.size() != r)
      throw DatumError("line " + std::to_string(row.line) + ": gram row " + std::to_string(i + 1) +
                       " has wrong length");
    for (std::size_t j = 0; j < r; ++j) d.gram(i, j) = parse_rational(row.tokens[j], row.line);
  }
  for (std::size_t k = 0; k < generator_rows.size(); ++k) {
    IntegerMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto& row = generator_rows[k][i];
      if (row.tokens.size() != r)
        throw DatumError("line " + std::to_string(row.line) + ": generator " + std::to_string(k + 1) +
                         " row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t j = 0; j < r; ++j) g(i, j) = parse_integer(row.tokens[j], row.line);
    }
    d.generators.push_back(std::move(g));
  }
  validate(d);
  return d;
}

RootDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatumError("cannot open datum file '" + path + "'");
  try {
    return parse_datum(in);
  } catch (const DatumError& e) {
    throw DatumError(path + ": " + e.what());
  }
}

std::string format_datum(const RootDatum& d) {
  std::ostringstream os;
  os << "label " << d.label << '\n';
  os << "rank " << d.rank() << '\n';
  os << "denominator " << d.denominator.get_str() << '\n';
  os << "basis\n";
  for (std::size_t j = 0; j < d.rank(); ++j) {
    for (std::size_t i = 0; i < d.ambient_dimension(); ++i)
      os << (i ? " " : "") << d.basis(i, j).get_str();
    os << '\n';
  }
  os << "gram\n";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t j = 0; j < d.rank(); ++j) os << (j ? " " : "") << d.gram(i, j).get_str();
    os << '\n';
  }
  os << "generators " << d.generators.size() << '\n';
  for (const auto& g : d.generators)
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g(i, j).get_str();
      os << '\n';
    }
  return os.str();
}

}  // namespace eorb::roots
