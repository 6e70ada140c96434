#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kr/diagram.hpp"
#include "kr/errors.hpp"
#include "kr/homology.hpp"
#include "kr/moybracket.hpp"
#include "kr/reducer.hpp"
#include "selftest.hpp"

namespace kr::cli {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly laurent_from_json(const json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) p += LaurentPoly::monomial(std::stoi(key), value.get<std::int64_t>());
  return p;
}

json to_json(const ResultDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["euler"] = laurent_to_json(doc.euler);
  j["parity0"] = laurent_to_json(doc.poincare0);
  j["parity1"] = laurent_to_json(doc.poincare1);
  j["steps"] = doc.steps;
  if (doc.bracket) j["bracket"] = laurent_to_json(*doc.bracket);
  return j;
}

ResultDocument from_json(const json& j) {
  ResultDocument doc;
  doc.n = j.at("n").get<int>();
  doc.euler = laurent_from_json(j.at("euler"));
  doc.poincare0 = laurent_from_json(j.at("parity0"));
  doc.poincare1 = laurent_from_json(j.at("parity1"));
  doc.steps = j.at("steps").get<int>();
  if (j.contains("bracket")) doc.bracket = laurent_from_json(j.at("bracket"));
  return doc;
}

namespace {

// Thrown for input files that cannot be read; reported like a domain error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Diagram load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_diagram(text.str());
}

json rows_json(const KoszulMF& m) {
  json rows = json::array();
  for (const auto& r : m.rows) rows.push_back({{"a", r.a.to_string()}, {"b", r.b.to_string()}, {"shift", r.internal_shift}});
  return rows;
}

json rules_json(const QuotientRing& ring) {
  json rules = json::array();
  for (const auto& r : ring.rules())
    rules.push_back(Monomial::of(r.leader, r.power).to_string() + " = " + r.replacement.to_string());
  return rules;
}

void print_rows(std::ostream& out, const KoszulMF& m) {
  for (const auto& r : m.rows)
    out << "  (" << r.a.to_string() << " ; " << r.b.to_string() << ") {" << r.internal_shift << "}\n";
  for (const auto& r : m.base.rules())
    out << "  rule " << Monomial::of(r.leader, r.power).to_string() << " = " << r.replacement.to_string() << "\n";
}

void require_closed(const Diagram& d) {
  if (!is_closed(d)) throw Error(ErrorKind::ValidationError, "the diagram has unglued endpoints");
}

struct Flags {
  std::string file;
  bool json = false;
  bool show_rows = false;
  bool signed_euler = false;
  int n_max = 0;
};

int cmd_build(const Flags& f, std::ostream& out) {
  const Diagram d = load(f.file);
  const KoszulMF m = glue(d);
  const Poly w = potential(m);
  if (f.json) {
    out << json{{"n", d.n},
                {"base", m.base.to_string()},
                {"shift", m.shift},
                {"parity", m.parity},
                {"rows", rows_json(m)},
                {"potential", w.to_string()}}
               .dump(2)
        << "\n";
  } else {
    out << describe(m) << "potential " << w.to_string() << "\n";
  }
  return 0;
}

int cmd_reduce(const Flags& f, std::ostream& out) {
  const Diagram d = load(f.file);
  const Reduction red = auto_reduce(glue(d));
  if (f.json) {
    json summands = json::array();
    for (const auto& s : red.result.summands) {
      const KoszulMF c = canonical_form(std::get<KoszulMF>(s));
      json one = {{"shift", c.shift}, {"parity", c.parity}, {"base", c.base.to_string()}};
      if (f.show_rows) {
        one["rows"] = rows_json(c);
        one["rules"] = rules_json(c.base);
      }
      summands.push_back(one);
    }
    json steps = json::array();
    for (const auto& s : red.trace.steps) steps.push_back(s.to_string());
    out << json{{"n", d.n}, {"steps", red.trace.steps.size()}, {"trace", steps}, {"summands", summands}}.dump(2) << "\n";
    return 0;
  }
  out << red.trace.steps.size() << " steps\n";
  for (const auto& s : red.trace.steps) out << "  " << s.to_string() << "\n";
  for (std::size_t i = 0; i < red.result.summands.size(); ++i) {
    const KoszulMF c = canonical_form(std::get<KoszulMF>(red.result.summands[i]));
    out << "summand " << i << ": " << c.rows.size() << " rows over " << c.base.to_string() << " shift {" << c.shift
        << "} parity " << c.parity << "\n";
    if (f.show_rows) print_rows(out, c);
  }
  return 0;
}

ResultDocument homology_document(const Diagram& d) {
  require_closed(d);
  const Reduction red = auto_reduce(glue(d));
  const HomologyResult h = graded_homology(red.result);
  ResultDocument doc;
  doc.n = d.n;
  doc.poincare0 = h.poincare0;
  doc.poincare1 = h.poincare1;
  doc.euler = euler_characteristic(h);
  doc.steps = static_cast<int>(red.trace.steps.size());
  return doc;
}

int cmd_euler(const Flags& f, std::ostream& out) {
  ResultDocument doc = homology_document(load(f.file));
  if (f.signed_euler) doc.euler = doc.poincare0 - doc.poincare1;
  if (f.json) {
    out << to_json(doc).dump(2) << "\n";
  } else {
    out << doc.euler.to_string() << "\n";
  }
  return 0;
}

int cmd_homology(const Flags& f, std::ostream& out) {
  ResultDocument doc = homology_document(load(f.file));
  if (f.signed_euler) doc.euler = doc.poincare0 - doc.poincare1;
  if (f.json) {
    out << to_json(doc).dump(2) << "\n";
  } else {
    out << "H0 " << doc.poincare0.to_string() << "\n"
        << "H1 " << doc.poincare1.to_string() << "\n"
        << (f.signed_euler ? "signed euler " : "euler ") << doc.euler.to_string() << "\n";
  }
  return 0;
}

int cmd_bracket(const Flags& f, std::ostream& out) {
  const Diagram d = load(f.file);
  const LaurentPoly v = bracket(d);
  if (f.json) {
    out << json{{"n", d.n}, {"bracket", laurent_to_json(v)}}.dump(2) << "\n";
  } else {
    out << v.to_string() << "\n";
  }
  return 0;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
  selftest::Options options;
  options.n_max = f.n_max;
  const auto results = selftest::run_all(options);
  bool all = true;
  json j = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (f.json) {
      j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      out << selftest::format_line(r) << "\n";
    }
  }
  if (f.json) out << j.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix factorizations of MOY diagrams"};
  app.require_subcommand(1);
  Flags f;
  int (*action)(const Flags&, std::ostream&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const Flags&, std::ostream&), bool takes_file) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_file) sub->add_option("file", f.file, "diagram file")->required();
    sub->add_flag("--json", f.json, "JSON output");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  add("build", "glue the pieces and print the factorization", cmd_build, true);
  add("reduce", "reduce and print the trace", cmd_reduce, true)->add_flag("--show-rows", f.show_rows, "print canonical rows and rules");
  add("euler", "graded Euler characteristic", cmd_euler, true)->add_flag("--signed-euler", f.signed_euler, "poincare0 - poincare1");
  add("homology", "graded dimensions of both parities", cmd_homology, true)
      ->add_flag("--signed-euler", f.signed_euler, "poincare0 - poincare1");
  add("bracket", "evaluate the MOY bracket", cmd_bracket, true);
  add("selftest", "run the acceptance suite", cmd_selftest, false)
      ->add_option("--n-max", f.n_max, "upper bound for n")
      ->check(CLI::Range(3, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action(f, out);
  } catch (const InputError& e) {
    err << f.file << ": " << e.what() << "\n";
  } catch (const Error& e) {
    err << (f.file.empty() ? std::string("krmf") : f.file) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << (f.file.empty() ? std::string("krmf") : f.file) << ": " << e.what() << "\n";
  }
  return 1;
}

}  // namespace kr::cli
