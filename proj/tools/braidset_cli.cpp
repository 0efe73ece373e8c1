#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidset/catalog.hpp"
#include "braidset/conditions.hpp"
#include "braidset/error.hpp"
#include "braidset/extension.hpp"
#include "braidset/graph.hpp"
#include "braidset/monoid.hpp"
#include "braidset/serialize.hpp"

namespace fs = std::filesystem;
using namespace braidset;

namespace {

enum Exit { ok = 0, semantic = 1, input = 2, budget = 3 };

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::budget_exceeded:
    case ErrorKind::degree_exceeded: return budget;
    case ErrorKind::prerequisite_failed:
    case ErrorKind::axiom_violation: return semantic;
    default: return input;
  }
}

void print_report(const ConditionReport& r) {
  std::cout << r.condition << ": ";
  if (!r.evaluated()) {
    std::cout << "skipped (" << r.skipped << ")\n";
    return;
  }
  std::cout << (r.holds ? "true" : "false");
  if (!r.holds) std::cout << " (" << r.violations << " violations)";
  std::cout << "\n";
  for (const auto& w : r.witnesses) std::cout << "  witness: " << w.text << "\n";
}

void print_suite(const SuiteReport& s) {
  std::cout << s.suite << ": " << (s.ok() ? "ok" : "FAILED");
  if (!s.hypotheses_met) std::cout << " (hypotheses not met: " << s.hypotheses << ")";
  std::cout << "\n";
  for (const auto& [k, v] : s.facts) std::cout << "  " << k << ": " << (v ? "true" : "false") << "\n";
  for (const auto& c : s.clauses)
    std::cout << "  [" << (c.holds ? "pass" : "FAIL") << "] " << c.name << "\n";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct CheckArgs {
  std::string file;
  std::vector<std::string> conditions;
  bool json = false;
};

int cmd_check(const CheckArgs& a) {
  QuadraticSet qs = load_solution_file(a.file);
  if (a.conditions.empty()) {
    Profile p = classify(qs);
    if (a.json) {
      std::cout << profile_to_json(p);
    } else {
      std::cout << qs.name() << " (" << qs.size() << " elements)\n";
      for (const auto& [name, rep] : p) print_report(rep);
    }
    return ok;
  }
  bool all = true;
  NamedReports reports;
  std::vector<SuiteReport> suites;
  for (const auto& name : a.conditions) {
    if (auto p = predicate_from_string(name)) {
      reports.add(predicate(qs, *p));
    } else if (auto c = condition_from_string(name)) {
      reports.add(check_condition(qs, *c));
    } else if (auto s = suite_from_string(name)) {
      suites.push_back(equivalence_suite(qs, *s));
    } else {
      throw Error(ErrorKind::malformed_document, "unknown condition '" + name + "'");
    }
  }
  for (const auto& r : reports.items) all = all && r.holds;
  for (const auto& s : suites) all = all && s.ok();
  if (a.json) {
    std::cout << reports_to_json(reports);
    for (const auto& s : suites) std::cout << suite_to_json(s);
  } else {
    for (const auto& r : reports.items) print_report(r);
    for (const auto& s : suites) print_suite(s);
  }
  return all ? ok : semantic;
}

struct MonoidArgs {
  std::string file;
  int degree = 3;
  std::vector<std::string> verify{"matched_pair", "m3", "lr3", "ybe", "strong"};
};

int cmd_monoid(const MonoidArgs& a) {
  QuadraticSet qs = load_solution_file(a.file);
  TruncatedMonoid tm(qs, a.degree);
  const int N = a.degree;
  bool braided = tm.braided();
  if (!braided) std::cout << "note: base not braided: prerequisites of the monoid theorems fail\n";
  if (!holds(qs, Predicate::involutive))
    std::cout << "note: base not involutive: involutivity check skipped\n";

  NamedReports out;
  std::optional<NamedReports> mp;
  auto matched = [&]() -> const NamedReports& {
    if (!mp) mp = verify_matched_pair(tm, N, false);
    return *mp;
  };
  std::vector<MonoidCheck> checks;
  for (const auto& v : a.verify) {
    if (v == "matched_pair") {
      for (const auto& r : matched().items)
        if (r.condition != "M3" && r.condition != "LR3") out.add(r);
    } else if (v == "m3" || v == "lr3") {
      out.add(*matched().find(v == "m3" ? "M3" : "LR3"));
    } else if (v == "ybe") {
      checks.push_back(MonoidCheck::ybe);
    } else if (v == "strong") {
      checks.push_back(MonoidCheck::strong);
    } else if (v == "nondegenerate") {
      checks.push_back(MonoidCheck::nondegenerate);
    } else if (v == "involutive") {
      checks.push_back(MonoidCheck::involutive);
    } else if (v == "triple") {
      out.append(verify_triple_product(tm, std::min(N, 2), false));
    } else if (v == "cancellation") {
      out.add(cancellation_search(tm));
    } else {
      throw Error(ErrorKind::malformed_document, "unknown monoid check '" + v + "'");
    }
  }
  out.append(verify_braided_monoid(tm, N, checks, false));
  bool all = true;
  for (const auto& r : out.items) {
    print_report(r);
    if (r.evaluated()) all = all && r.holds;
  }
  return all ? ok : semantic;
}

struct ExtendArgs {
  std::string x, y, ground;
  int degree = 2;
};

int cmd_extend(const ExtendArgs& a) {
  QuadraticSet x = load_solution_file(a.x), y = load_solution_file(a.y);
  GroundDocument doc = load_ground_file(a.ground, &x, &y);
  ExtensionSet ext = build_extension(doc.x_part, doc.y_part, doc.ground);
  const QuadraticSet& z = ext.assembled;
  std::cout << "YBE: " << bool_text(holds(z, Condition::ybe))
            << "; stu: " << bool_text(holds(ext, MixedCondition::stu))
            << "; orbits: " << orbit_partition(z).blocks.size() << "\n";
  for (MixedCondition m : all_mixed_conditions) print_report(check_mixed(ext, m));
  bool all = true;
  for (ExtensionSuite s : all_extension_suites) {
    SuiteReport r = verify_extension_theorem(ext, s, a.degree);
    print_suite(r);
    all = all && r.ok();
  }
  return all ? ok : semantic;
}

struct EnumerateArgs {
  std::string x, y;
  std::vector<std::string> filters;
  std::string mode = "full_table";
  std::string family;
  std::size_t limit = 0;
  std::size_t budget = 9;
};

int cmd_enumerate(const EnumerateArgs& a) {
  QuadraticSet x = load_solution_file(a.x), y = load_solution_file(a.y);
  EnumerationOptions opt;
  opt.limit = a.limit;
  opt.table_budget = a.budget;
  for (const auto& f : a.filters) {
    auto parsed = extension_filter_from_string(f);
    if (!parsed) throw Error(ErrorKind::malformed_document, "unknown filter '" + f + "'");
    opt.filters.push_back(*parsed);
  }
  std::optional<PermutationFamily> family;
  if (a.mode == "permutation_family") {
    if (a.family.empty())
      throw Error(ErrorKind::malformed_document, "permutation_family mode needs --family");
    family = load_family_file(a.family, x, y);
    opt.mode = EnumerationMode::permutation_family;
    opt.family = &*family;
  } else if (a.mode != "full_table") {
    throw Error(ErrorKind::malformed_document, "unknown mode '" + a.mode + "'");
  }
  std::size_t index = 0;
  EnumerationSummary s = enumerate_extensions(x, y, opt, [&](const ExtensionSet& e) {
    std::cout << ++index << " " << e.assembled.name()
              << " ybe=" << bool_text(holds(e.assembled, Condition::ybe)) << "\n";
    return true;
  });
  std::cout << "visited: " << s.visited << "; regular: " << s.regular << "; emitted: " << s.emitted
            << (s.truncated ? " (limit reached)" : "") << "\n";
  return ok;
}

struct GraphArgs {
  std::string file, out;
  bool self_loops = false;
};

int cmd_graph(const GraphArgs& a) {
  QuadraticSet qs = load_solution_file(a.file);
  LabeledDigraph g = gamma_graph(qs);
  DotOptions opt;
  opt.self_loops = a.self_loops;
  std::string dot = export_dot(g, opt);
  if (a.out.empty()) {
    std::cout << dot;
    return ok;
  }
  std::ofstream os(a.out, std::ios::binary);
  if (!os) throw Error(ErrorKind::malformed_document, "cannot write " + a.out);
  os << dot;
  std::cout << "vertices: " << g.vertices.size() << "; edges: " << g.proper_edges().size()
            << "; orbits: " << orbit_partition(qs).blocks.size()
            << (g.lri ? "" : "; note: lri fails, arrows follow the left action") << "\n";
  return ok;
}

int cmd_iso(const std::string& f1, const std::string& f2) {
  QuadraticSet a = load_solution_file(f1), b = load_solution_file(f2);
  auto phi = find_isomorphism(a, b);
  if (!phi) {
    std::cout << "not isomorphic\n";
    return semantic;
  }
  std::cout << "isomorphic:";
  for (Elem x = 0; x < a.size(); ++x) std::cout << " " << a.label(x) << "->" << b.label((*phi)[x]);
  std::cout << "\n";
  return ok;
}

int cmd_catalog(const std::string& key, const std::string& data_dir) {
  if (key.empty()) {
    for (const auto& k : catalog_keys()) std::cout << k << "  " << catalog_entry(k).description << "\n";
    return ok;
  }
  CatalogEntry e = catalog_entry(key);
  std::string actual = catalog_profile(e);
  fs::path golden = fs::path(data_dir) / "catalog" / (key + ".json");
  std::string expected = read_text_file(golden);
  if (actual == expected) {
    std::cout << "profile matches\n";
    return ok;
  }
  std::cout << "profile drift against " << golden.string() << "\n" << actual;
  return semantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite set-theoretic Yang-Baxter solutions: conditions, monoids, extensions"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Classify a solution or check selected conditions");
  c->add_option("file", check.file, "solution document")->required();
  c->add_option("--conditions", check.conditions, "predicates, conditions or suites")->delimiter(',');
  c->add_flag("--json", check.json, "canonical JSON output");

  MonoidArgs monoid;
  auto* m = app.add_subcommand("monoid", "Verify the truncated monoid S(X,r)");
  m->add_option("file", monoid.file, "solution document")->required();
  m->add_option("--degree", monoid.degree, "truncation degree")->capture_default_str();
  m->add_option("--verify", monoid.verify,
                "matched_pair, m3, lr3, ybe, strong, nondegenerate, involutive, triple, cancellation")
      ->delimiter(',');

  ExtendArgs extend;
  auto* e = app.add_subcommand("extend", "Build and check a regular extension");
  e->add_option("x", extend.x, "X solution")->required();
  e->add_option("y", extend.y, "Y solution")->required();
  e->add_option("ground", extend.ground, "ground actions document")->required();
  e->add_option("--degree", extend.degree, "degree for monoid-level suites")->capture_default_str();

  EnumerateArgs enumerate;
  auto* n = app.add_subcommand("enumerate", "Enumerate regular extensions");
  n->add_option("x", enumerate.x, "X solution")->required();
  n->add_option("y", enumerate.y, "Y solution")->required();
  n->add_option("--filter", enumerate.filters, "ybe, square_free, involutive, lri, stu")->delimiter(',');
  n->add_option("--mode", enumerate.mode, "full_table or permutation_family")->capture_default_str();
  n->add_option("--family", enumerate.family, "permutation family document");
  n->add_option("--limit", enumerate.limit, "stop after this many (0: no limit)");
  n->add_option("--budget", enumerate.budget, "max |X|*|Y| for full_table")->capture_default_str();

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Export the action graph as DOT");
  g->add_option("file", graph.file, "solution document")->required();
  g->add_option("-o", graph.out, "output file (default stdout)");
  g->add_flag("--self-loops", graph.self_loops, "include self-loops");

  std::string iso1, iso2;
  auto* i = app.add_subcommand("iso", "Search for an isomorphism of two solutions");
  i->add_option("file1", iso1)->required();
  i->add_option("file2", iso2)->required();

  std::string key, data_dir = BRAIDSET_DATA_DIR;
  auto* k = app.add_subcommand("catalog", "List catalog entries or check one against its golden profile");
  k->add_option("key", key);
  k->add_option("--data-dir", data_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? ok : input;
  }

  try {
    if (*c) return cmd_check(check);
    if (*m) return cmd_monoid(monoid);
    if (*e) return cmd_extend(extend);
    if (*n) return cmd_enumerate(enumerate);
    if (*g) return cmd_graph(graph);
    if (*i) return cmd_iso(iso1, iso2);
    if (*k) return cmd_catalog(key, data_dir);
  } catch (const Error& err) {
    std::cerr << "error (" << to_string(err.kind()) << "): " << err.what() << "\n";
    return exit_for(err.kind());
  }
  return ok;
}
