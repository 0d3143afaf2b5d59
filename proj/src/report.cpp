#include "eorb/report.hpp"

#include <sstream>

namespace eorb::report {

namespace {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();  // out-of-range values keep full precision as strings
}

Json divisors_to_json(const std::vector<Integer>& divisors) {
  Json a = Json::array();
  for (const auto& d : divisors) a.push_back(integer_to_json(d));
  return a;
}

}  // namespace

Json polynomial_to_json(const epoly::Polynomial& p) {
  Json a = Json::array();
  for (const auto& [exp, coeff] : p.terms())
    a.push_back({{"p", exp.first}, {"q", exp.second}, {"coeff", epoly::coefficient_string(coeff)}});
  return a;
}

epoly::Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error("polynomial JSON must be an array of terms");
  epoly::Polynomial p;
  for (const auto& t : j)
    p += epoly::Polynomial::monomial(t.at("p").get<int>(), t.at("q").get<int>(),
                                     epoly::parse_coefficient(t.at("coeff").get<std::string>()));
  return p;
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json class_to_json(const orbifold::ClassContribution& c) {
  return {{"class_rep", matrix_to_json(c.representative)},
          {"class_size", c.class_size},
          {"centralizer_order", c.centralizer_order},
          {"shift", c.shift},
          {"pi0_divisors", divisors_to_json(c.pi0_divisors)},
          {"average_poly", polynomial_to_json(c.average)},
          {"weighted_poly", polynomial_to_json(c.weighted)}};
}

Json classes_to_json(const orbifold::OrbifoldReport& r) {
  Json a = Json::array();
  for (const auto& c : r.classes) a.push_back(class_to_json(c));
  return a;
}

Json duality_classes_to_json(const orbifold::DualityReport& r) {
  Json a = Json::array();
  for (const auto& rec : r.classes) {
    Json counts = Json::array();
    for (const auto& [x, y] : rec.fixed_counts)
      counts.push_back(Json::array({integer_to_json(x), integer_to_json(y)}));
    a.push_back({{"class_rep", matrix_to_json(rec.representative)},
                 {"centralizer_order", rec.centralizer_order},
                 {"primal_divisors", divisors_to_json(rec.primal_divisors)},
                 {"dual_divisors", divisors_to_json(rec.dual_divisors)},
                 {"fixed_counts", std::move(counts)},
                 {"agrees", rec.agrees}});
  }
  return a;
}

Json closed_form_terms_to_json(const sln::ClosedForm& cf) {
  Json a = Json::array();
  for (const auto& t : cf.terms)
    a.push_back({{"partition", t.alpha.parts()},
                 {"tau", t.tau},
                 {"shift", t.shift},
                 {"numerator", polynomial_to_json(t.numerator)}});
  return a;
}

std::string matrix_text(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string divisors_text(const std::vector<Integer>& divisors) {
  if (divisors.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < divisors.size(); ++i) os << (i ? " x " : "") << "Z/" << divisors[i];
  return os.str();
}

std::string classes_text(const orbifold::OrbifoldReport& r) {
  std::ostringstream os;
  for (std::size_t k = 0; k < r.classes.size(); ++k) {
    const auto& c = r.classes[k];
    os << "class " << k << '\n'
       << "  class_rep: " << matrix_text(c.representative) << '\n'
       << "  class_size: " << c.class_size << '\n'
       << "  centralizer_order: " << c.centralizer_order << '\n'
       << "  shift: " << c.shift << '\n'
       << "  pi0: " << divisors_text(c.pi0_divisors) << '\n'
       << "  average: " << epoly::to_text(c.average) << '\n'
       << "  weighted: " << epoly::to_text(c.weighted) << "\n\n";
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + '\n'; }

}  // namespace eorb::report
