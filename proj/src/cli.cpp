#include "eorb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "eorb/report.hpp"

namespace eorb::cli {

using report::Json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    throw UsageError(what + " must be an integer, got '" + token + "'");
  return value;
}

roots::GroupForm parse_form(const std::string& s) {
  if (s == "simply_connected" || s == "sc") return roots::GroupForm::simply_connected;
  if (s == "adjoint" || s == "ad") return roots::GroupForm::adjoint;
  throw UsageError("unknown group form '" + s + "' (expected simply_connected or adjoint)");
}

roots::ClassicalFamily parse_family(const std::string& s) {
  if (s == "B") return roots::ClassicalFamily::B;
  if (s == "C") return roots::ClassicalFamily::C;
  if (s == "D") return roots::ClassicalFamily::D;
  throw UsageError("unknown classical family '" + s + "' (expected B, C or D)");
}

unsigned thread_count() {
  if (const char* env = std::getenv("EORB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

struct Job {
  std::string command;
  std::vector<std::string> group;
  std::string space;
  std::string format = "json";
  std::size_t cap = 10'000'000;
  int n = 0;
  int m = 0;
  int d = -1;
  std::string surface;

  Json echo() const {
    Json j{{"command", command}, {"format", format}};
    if (command == "closed-form") {
      j["n"] = n;
      j["m"] = m;
      j["d"] = d;
      j["surface"] = surface;
    } else {
      j["group"] = group;
      j["cap"] = cap;
      if (!space.empty()) j["space"] = space;
      if (!surface.empty()) j["surface"] = surface;
    }
    return j;
  }
};

epoly::SpaceDescriptor resolve_space(const std::string& name) {
  const auto names = epoly::space_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown space '" + name + "' (expected " + join(names) + ")");
  return epoly::SpaceDescriptor::from_name(name);
}

// Abelian group A whose closed form corresponds to an engine space on SL(n)/Z_m.
std::string surface_for_space(const std::string& space) {
  if (space == "betti") return "betti";
  if (space == "abelian-surface") return "abelian";
  if (space == "dolbeault" || space == "derham") return "dolbeault";
  throw UsageError("space '" + space + "' has no closed form (expected betti, dolbeault, derham or abelian-surface)");
}

orbifold::EngineOptions engine_options(const Job& job) { return {job.cap, thread_count()}; }

void write_header(std::ostream& out, const std::string& label, const orbifold::OrbifoldReport& r) {
  out << "datum: " << label << '\n'
      << "space: " << r.space << '\n'
      << "group_order: " << r.group_order << '\n'
      << "classes: " << r.classes.size() << "\n\n"
      << report::classes_text(r);
}

int compute(const Job& job, std::ostream& out) {
  const auto datum = resolve_group(job.group);
  const auto r = orbifold::orbifold_e_polynomial(datum, resolve_space(job.space), engine_options(job));
  if (job.format == "text") {
    write_header(out, datum.label, r);
    out << "total: " << epoly::to_text(r.total) << '\n';
  } else {
    out << report::dump({{"config_echo", job.echo()},
                         {"datum", datum.label},
                         {"group_order", r.group_order},
                         {"classes", report::classes_to_json(r)},
                         {"total", report::polynomial_to_json(r.total)}});
  }
  return ok;
}

int mirror(const Job& job, std::ostream& out) {
  const auto datum = resolve_group(job.group);
  const auto r = orbifold::mirror_check(datum, resolve_space(job.space), engine_options(job));
  if (job.format == "text") {
    write_header(out, r.primal.datum_label, r.primal);
    out << "dual ";
    write_header(out, r.dual.datum_label, r.dual);
    for (const auto& p : r.pairs)
      out << "pair " << p.primal_class << " <-> " << p.dual_class << ": "
          << epoly::to_text(p.difference) << '\n';
    out << "total: " << epoly::to_text(r.primal.total) << '\n'
        << "dual_total: " << epoly::to_text(r.dual.total) << '\n'
        << "verdict: " << (r.equal ? "equal" : "not equal") << '\n';
  } else {
    Json diffs = Json::array();
    for (const auto& p : r.pairs)
      diffs.push_back({{"primal_class", p.primal_class},
                       {"dual_class", p.dual_class},
                       {"difference", report::polynomial_to_json(p.difference)}});
    out << report::dump({{"config_echo", job.echo()},
                         {"datum", r.primal.datum_label},
                         {"dual_datum", r.dual.datum_label},
                         {"group_order", r.primal.group_order},
                         {"classes", report::classes_to_json(r.primal)},
                         {"dual_classes", report::classes_to_json(r.dual)},
                         {"total", report::polynomial_to_json(r.primal.total)},
                         {"dual_total", report::polynomial_to_json(r.dual.total)},
                         {"pair_diffs", std::move(diffs)},
                         {"verdict", r.equal}});
  }
  return r.equal ? ok : not_equal;
}

int duality(const Job& job, std::ostream& out) {
  const auto datum = resolve_group(job.group);
  const auto r = orbifold::duality_check(datum, engine_options(job));
  if (job.format == "text") {
    out << "datum: " << r.datum_label << '\n' << "classes: " << r.classes.size() << "\n\n";
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
      const auto& c = r.classes[k];
      out << "class " << k << '\n'
          << "  class_rep: " << report::matrix_text(c.representative) << '\n'
          << "  centralizer_order: " << c.centralizer_order << '\n'
          << "  pi0: " << report::divisors_text(c.primal_divisors) << '\n'
          << "  dual_pi0: " << report::divisors_text(c.dual_divisors) << '\n'
          << "  agrees: " << (c.agrees ? "yes" : "no") << "\n\n";
    }
    out << "verdict: " << (r.consistent ? "consistent" : "inconsistent") << '\n';
  } else {
    out << report::dump({{"config_echo", job.echo()},
                         {"datum", r.datum_label},
                         {"classes", report::duality_classes_to_json(r)},
                         {"verdict", r.consistent}});
  }
  return r.consistent ? ok : not_equal;
}

int closed_form(Job job, std::ostream& out) {
  const auto e_a = sln::abelian_group_polynomial(job.surface);
  if (job.d < 0) job.d = sln::circle_factor_count(e_a);
  const auto cf = sln::closed_form_terms(job.n, job.m, job.d, e_a);
  if (job.format == "text") {
    out << "closed form n=" << job.n << " m=" << job.m << " d=" << job.d << " A=" << job.surface
        << "\n\n";
    for (const auto& t : cf.terms)
      out << "partition " << t.alpha.to_string() << ": tau " << t.tau << ", shift " << t.shift
          << ", numerator " << epoly::to_text(t.numerator) << '\n';
    out << "\ntotal: " << epoly::to_text(cf.total) << '\n';
  } else {
    out << report::dump({{"config_echo", job.echo()},
                         {"terms", report::closed_form_terms_to_json(cf)},
                         {"total", report::polynomial_to_json(cf.total)}});
  }
  return ok;
}

int cross_validate(const Job& job, std::ostream& out) {
  if (job.group.empty() || job.group[0] != "sl")
    throw UsageError("cross-validate needs --group sl n m, got '" + join(job.group) + "'");
  const auto surface = job.surface.empty() ? surface_for_space(job.space) : job.surface;
  const auto datum = resolve_group(job.group);
  const int n = parse_int(job.group[1], "n");
  const int m = job.group.size() > 2 ? parse_int(job.group[2], "m") : 1;
  const auto e_a = sln::abelian_group_polynomial(surface);
  const auto engine =
      orbifold::orbifold_e_polynomial(datum, resolve_space(job.space), engine_options(job));
  const auto formula = sln::closed_form_eorb(n, m, sln::circle_factor_count(e_a), e_a);
  const bool equal = engine.total == formula;
  if (job.format == "text") {
    write_header(out, datum.label, engine);
    out << "total: " << epoly::to_text(engine.total) << '\n'
        << "closed_form_total: " << epoly::to_text(formula) << '\n'
        << "verdict: " << (equal ? "equal" : "not equal") << '\n';
  } else {
    out << report::dump({{"config_echo", job.echo()},
                         {"datum", datum.label},
                         {"group_order", engine.group_order},
                         {"classes", report::classes_to_json(engine)},
                         {"total", report::polynomial_to_json(engine.total)},
                         {"closed_form_total", report::polynomial_to_json(formula)},
                         {"verdict", equal}});
  }
  return equal ? ok : not_equal;
}

}  // namespace

roots::RootDatum resolve_group(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw UsageError("empty --group selector");
  const std::string& kind = tokens[0];
  if (kind == "sl") {
    if (tokens.size() < 2 || tokens.size() > 3)
      throw UsageError("--group sl expects 'sl n m', got '" + join(tokens) + "'");
    const int n = parse_int(tokens[1], "sl n");
    const int m = tokens.size() == 3 ? parse_int(tokens[2], "sl m") : 1;
    return roots::sl_quotient_datum(n, m);
  }
  if (kind == "classical") {
    if (tokens.size() != 4)
      throw UsageError("--group classical expects 'classical B|C|D n form', got '" + join(tokens) + "'");
    return roots::classical_datum(parse_family(tokens[1]), parse_int(tokens[2], "classical n"),
                                  parse_form(tokens[3]));
  }
  if (kind == "custom") {
    if (tokens.size() != 2)
      throw UsageError("--group custom expects 'custom path', got '" + join(tokens) + "'");
    try {
      return roots::load_datum(tokens[1]);
    } catch (const Error& e) {
      throw UsageError("custom datum '" + tokens[1] + "': " + e.what());
    }
  }
  throw UsageError("unknown group kind '" + kind + "' (expected sl, classical or custom)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact orbifold E-polynomials of torus quotients and their mirror checks", "eorb"};
  app.require_subcommand(1);
  Job job;

  auto add_engine_options = [&job](CLI::App* sub, bool needs_space) {
    sub->add_option("--group", job.group, "sl n m | classical B|C|D n simply_connected|adjoint | custom path")
        ->required()
        ->expected(2, 4);
    auto* space = sub->add_option("--space", job.space, "betti | dolbeault | derham | abelian-surface | mixed");
    if (needs_space) space->required();
    sub->add_option("--format", job.format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap", job.cap, "largest Weyl group to enumerate")->check(CLI::PositiveNumber);
  };

  add_engine_options(app.add_subcommand("compute", "orbifold E-polynomial with per-class report"), true);
  add_engine_options(app.add_subcommand("mirror-check", "compare against the Langlands dual datum"), true);
  add_engine_options(app.add_subcommand("duality-check", "component-group duality per class"), false);
  auto* cross = app.add_subcommand("cross-validate", "engine versus closed form for sl n m");
  add_engine_options(cross, true);
  cross->add_option("--surface", job.surface, "abelian group for the closed form (default: matches --space)")
      ->check(CLI::IsMember({"abelian", "betti", "dolbeault"}));
  auto* cf = app.add_subcommand("closed-form", "closed form for SL(n)/Z_m");
  cf->add_option("--n", job.n)->required()->check(CLI::PositiveNumber);
  cf->add_option("--m", job.m)->required()->check(CLI::PositiveNumber);
  cf->add_option("--d", job.d, "number of circle factors of A (default: inferred)");
  cf->add_option("--surface", job.surface)->required()->check(CLI::IsMember({"abelian", "betti", "dolbeault"}));
  cf->add_option("--format", job.format)->check(CLI::IsMember({"json", "text"}));

  if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0]
        << "' (expected compute, mirror-check, duality-check, closed-form or cross-validate)\n";
    return failure;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << '\n';
    return failure;
  }

  job.command = app.get_subcommands().front()->get_name();
  try {
    if (job.command == "compute") return compute(job, out);
    if (job.command == "mirror-check") return mirror(job, out);
    if (job.command == "duality-check") return duality(job, out);
    if (job.command == "closed-form") return closed_form(job, out);
    return cross_validate(job, out);
  } catch (const weyl::GroupCapExceeded& e) {
    err << "error: group '" << join(job.group) << "' exceeds --cap " << job.cap << ": " << e.what()
        << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return failure;
}

}  // namespace eorb::cli
