#include "braidset/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "braidset/error.hpp"
#include "json.hpp"

namespace braidset {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::malformed_document, e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorKind::malformed_document, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string str(const json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::malformed_document, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> labels_of(const json& doc) {
  const json& els = field(doc, "elements");
  if (!els.is_array() || els.empty())
    throw Error(ErrorKind::malformed_document, "'elements' must be a non-empty array");
  std::vector<std::string> out;
  for (const auto& e : els) out.push_back(str(e, "element"));
  return out;
}

std::pair<std::string, std::string> label_pair(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    throw Error(ErrorKind::malformed_document, std::string(what) + " must be a pair of labels");
  return {str(v[0], what), str(v[1], what)};
}

Perm cycles_over(const std::string& text, const std::vector<std::string>& labels) {
  std::vector<std::string> copy = labels;
  QuadraticSet lookup("", copy, std::vector<Pair>(labels.size() * labels.size()));
  return parse_cycles(text, labels.size(), [&](std::string_view l) { return lookup.find(l); });
}

QuadraticSet solution_from_json(const json& doc, std::string fallback_name) {
  if (!doc.is_object()) throw Error(ErrorKind::malformed_document, "solution must be an object");
  std::string name = doc.contains("name") ? str(doc["name"], "name") : std::move(fallback_name);
  std::vector<std::string> labels = labels_of(doc);
  if (doc.contains("permutational")) {
    const json& p = doc["permutational"];
    Perm f = cycles_over(str(field(p, "f"), "f"), labels);
    Perm g = cycles_over(str(field(p, "g"), "g"), labels);
    return make_permutational(labels, f, g, name);
  }
  if (doc.contains("trivial") && doc["trivial"] == true) return make_trivial(labels, name);
  if (doc.contains("identity") && doc["identity"] == true) return make_identity(labels, name);

  const std::size_t n = labels.size();
  QuadraticSet lookup(name, labels, std::vector<Pair>(n * n));
  const json& r = field(doc, "r");
  if (!r.is_array()) throw Error(ErrorKind::malformed_document, "'r' must be an array");
  std::vector<Pair> table(n * n);
  std::vector<char> seen(n * n, 0);
  for (const auto& entry : r) {
    auto in = label_pair(field(entry, "in"), "in");
    auto out = label_pair(field(entry, "out"), "out");
    Elem a = lookup.index(in.first), b = lookup.index(in.second);
    if (seen[a * n + b])
      throw Error(ErrorKind::duplicate_entry, "pair (" + in.first + "," + in.second + ") given twice");
    seen[a * n + b] = 1;
    table[a * n + b] = {lookup.index(out.first), lookup.index(out.second)};
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!seen[a * n + b])
        throw Error(ErrorKind::incomplete_table,
                    "missing pair (" + labels[a] + "," + labels[b] + ")");
  return QuadraticSet(name, labels, std::move(table));
}

std::vector<std::string> split_group(const std::string& key) {
  std::istringstream is(key);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  if (out.empty()) throw Error(ErrorKind::malformed_document, "empty label group");
  return out;
}

json report_json(const ConditionReport& r) {
  json j;
  j["condition"] = r.condition;
  j["holds"] = r.holds;
  if (!r.evaluated()) {
    j["skipped"] = r.skipped;
    return j;
  }
  j["violations"] = r.violations;
  if (!r.witnesses.empty()) j["witness"] = r.witnesses.front().text;
  return j;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::malformed_document, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

QuadraticSet load_solution(std::string_view document, std::string fallback_name) {
  return solution_from_json(parse(document), std::move(fallback_name));
}

QuadraticSet load_solution_file(const std::filesystem::path& path) {
  return load_solution(read_text_file(path), path.stem().string());
}

std::string solution_to_json(const QuadraticSet& qs) {
  json j;
  j["name"] = qs.name();
  j["elements"] = qs.labels();
  json r = json::array();
  for (Elem a = 0; a < qs.size(); ++a)
    for (Elem b = 0; b < qs.size(); ++b) {
      Pair p = qs.apply(a, b);
      r.push_back({{"in", {qs.label(a), qs.label(b)}}, {"out", {qs.label(p.first), qs.label(p.second)}}});
    }
  j["r"] = std::move(r);
  return j.dump(1) + "\n";
}

std::string report_to_json(const ConditionReport& r) { return report_json(r).dump(2) + "\n"; }

std::string profile_to_json(const Profile& p) {
  json j = json::array();
  for (const auto& [name, rep] : p) j.push_back(report_json(rep));
  return j.dump(2) + "\n";
}

std::string reports_to_json(const NamedReports& r) {
  json j = json::array();
  for (const auto& rep : r.items) j.push_back(report_json(rep));
  return j.dump(2) + "\n";
}

std::string suite_to_json(const SuiteReport& s) {
  json j;
  j["suite"] = s.suite;
  j["hypotheses"] = s.hypotheses;
  j["hypotheses_met"] = s.hypotheses_met;
  json facts = json::object();
  for (const auto& [k, v] : s.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  json clauses = json::object();
  for (const auto& c : s.clauses) clauses[c.name] = c.holds;
  j["clauses"] = std::move(clauses);
  j["ok"] = s.ok();
  return j.dump(2) + "\n";
}

namespace {

QuadraticSet part_from(const json& doc, const char* key, const std::filesystem::path& base_dir) {
  const json& v = field(doc, key);
  if (v.is_string()) {
    std::filesystem::path p = base_dir / v.get<std::string>();
    return load_solution_file(p);
  }
  return solution_from_json(v, key[0] == 'x' ? "X" : "Y");
}

}  // namespace

GroundDocument load_ground(std::string_view document, const std::filesystem::path& base_dir,
                           const QuadraticSet* x_part, const QuadraticSet* y_part) {
  json doc = parse(document);
  if (!doc.is_object()) throw Error(ErrorKind::malformed_document, "ground document must be an object");
  QuadraticSet x = x_part ? *x_part : part_from(doc, "x_solution", base_dir);
  QuadraticSet y = y_part ? *y_part : part_from(doc, "y_solution", base_dir);
  const std::size_t nx = x.size(), ny = y.size();
  GroundActions g{nx, ny, std::vector<Elem>(nx * ny), std::vector<Elem>(nx * ny)};

  if (doc.contains("ground")) {
    std::vector<char> seen(nx * ny, 0);
    for (const auto& e : doc["ground"]) {
      Elem a = y.index(str(field(e, "alpha"), "alpha"));
      Elem xi = x.index(str(field(e, "x"), "x"));
      std::size_t k = a * nx + xi;
      if (seen[k]) throw Error(ErrorKind::duplicate_entry, "ground entry repeated");
      seen[k] = 1;
      g.left[k] = x.index(str(field(e, "left"), "left"));
      g.right[k] = y.index(str(field(e, "right"), "right"));
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (!seen[k])
        throw Error(ErrorKind::incomplete_table,
                    "missing ground entry (" + y.label(static_cast<Elem>(k / nx)) + "," +
                        x.label(static_cast<Elem>(k % nx)) + ")");
    return {std::move(x), std::move(y), std::move(g)};
  }

  std::vector<Perm> l_alpha(ny, identity_perm(nx)), r_x(nx, identity_perm(ny));
  auto read_maps = [&](const char* key, const QuadraticSet& keys, const QuadraticSet& over,
                       std::vector<Perm>& dst) {
    if (!doc.contains(key)) return false;
    for (const auto& [group, cycles] : doc[key].items()) {
      Perm p = cycles_over(str(cycles, key), over.labels());
      for (const auto& l : split_group(group)) dst[keys.index(l)] = p;
    }
    return true;
  };
  if (!read_maps("L_alpha", y, x, l_alpha))
    throw Error(ErrorKind::malformed_document, "ground document needs 'ground' or 'L_alpha'");
  bool lri = doc.value("lri_completion", false);
  std::vector<Perm> l_x(nx, identity_perm(ny));
  bool have_r = read_maps("R_x", x, y, r_x);
  bool have_lx = read_maps("L_x", x, y, l_x);
  if (!have_r && lri) {
    if (!have_lx) throw Error(ErrorKind::malformed_document, "lri_completion needs 'L_x'");
    for (Elem xi = 0; xi < nx; ++xi) r_x[xi] = inverse(l_x[xi]);
  }
  for (Elem a = 0; a < ny; ++a)
    for (Elem xi = 0; xi < nx; ++xi) {
      g.left[a * nx + xi] = l_alpha[a][xi];
      g.right[a * nx + xi] = r_x[xi][a];
    }
  return {std::move(x), std::move(y), std::move(g)};
}

GroundDocument load_ground_file(const std::filesystem::path& path, const QuadraticSet* x_part,
                                const QuadraticSet* y_part) {
  return load_ground(read_text_file(path), path.parent_path(), x_part, y_part);
}

std::string ground_to_json(const ExtensionSet& ext, const std::string& x_ref,
                           const std::string& y_ref) {
  const QuadraticSet& x = ext.x_part;
  const QuadraticSet& y = ext.y_part;
  json j;
  j["x_solution"] = x_ref;
  j["y_solution"] = y_ref;
  if (!holds(ext.assembled, Condition::lri)) {
    json g = json::array();
    for (Elem a = 0; a < y.size(); ++a)
      for (Elem xi = 0; xi < x.size(); ++xi)
        g.push_back({{"alpha", y.label(a)},
                     {"x", x.label(xi)},
                     {"left", x.label(ext.ground.act_left(a, xi))},
                     {"right", y.label(ext.ground.act_right(a, xi))}});
    j["ground"] = std::move(g);
    return j.dump(2) + "\n";
  }
  // Groups actors with equal maps, in order of first appearance.
  auto grouped = [](std::size_t actors, std::size_t targets, const QuadraticSet& who,
                    const std::vector<std::string>& over, auto image) {
    std::vector<std::pair<Perm, std::string>> groups;
    for (Elem a = 0; a < actors; ++a) {
      Perm p(targets);
      for (Elem t = 0; t < targets; ++t) p[t] = image(a, t);
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == p; });
      if (it == groups.end())
        groups.emplace_back(p, who.label(a));
      else
        it->second += " " + who.label(a);
    }
    json out = json::object();
    for (const auto& [p, names] : groups) out[names] = format_cycles(p, over);
    return out;
  };
  j["lri_completion"] = true;
  j["L_alpha"] = grouped(y.size(), x.size(), y, x.labels(),
                         [&](Elem a, Elem t) { return ext.ground.act_left(a, t); });
  j["L_x"] = grouped(x.size(), y.size(), x, y.labels(),
                     [&](Elem xi, Elem t) { return ext.accompanying.act_tri_r(xi, t); });
  return j.dump(2) + "\n";
}

std::string family_to_json(const PermutationFamily& family, const QuadraticSet& x_part,
                           const QuadraticSet& y_part) {
  std::vector<std::string> z = x_part.labels();
  z.insert(z.end(), y_part.labels().begin(), y_part.labels().end());
  auto assignments = [&](const std::vector<FamilyAssignment>& as) {
    json out = json::object();
    for (const auto& a : as) {
      std::string group;
      for (Elem e : a.elements) group += (group.empty() ? "" : " ") + z[e];
      out[group] = format_cycles(a.perm, z);
    }
    return out;
  };
  json j;
  j["lri_completion"] = family.lri_completion;
  json slots = json::array();
  for (const auto& s : family.slots) {
    json opts = json::array();
    for (const auto& o : s.options) {
      json oj;
      oj["name"] = o.name;
      oj["left"] = assignments(o.left);
      if (!o.right.empty()) oj["right"] = assignments(o.right);
      opts.push_back(std::move(oj));
    }
    slots.push_back({{"name", s.name}, {"options", std::move(opts)}});
  }
  j["slots"] = std::move(slots);
  return j.dump(2) + "\n";
}

PermutationFamily load_family(std::string_view document, const QuadraticSet& x_part,
                              const QuadraticSet& y_part) {
  json doc = parse(document);
  std::vector<std::string> z = x_part.labels();
  z.insert(z.end(), y_part.labels().begin(), y_part.labels().end());
  QuadraticSet lookup("", z, std::vector<Pair>(z.size() * z.size()));
  PermutationFamily fam;
  fam.lri_completion = doc.value("lri_completion", true);
  auto assignments = [&](const json& opt, const char* key) {
    std::vector<FamilyAssignment> out;
    if (!opt.contains(key)) return out;
    for (const auto& [group, cycles] : opt[key].items()) {
      FamilyAssignment a;
      for (const auto& l : split_group(group)) a.elements.push_back(lookup.index(l));
      a.perm = cycles_over(str(cycles, key), z);
      out.push_back(std::move(a));
    }
    return out;
  };
  for (const auto& s : field(doc, "slots")) {
    FamilySlot slot;
    slot.name = str(field(s, "name"), "slot name");
    for (const auto& o : field(s, "options"))
      slot.options.push_back({str(field(o, "name"), "option name"), assignments(o, "left"),
                              assignments(o, "right")});
    fam.slots.push_back(std::move(slot));
  }
  return fam;
}

PermutationFamily load_family_file(const std::filesystem::path& path, const QuadraticSet& x_part,
                                   const QuadraticSet& y_part) {
  return load_family(read_text_file(path), x_part, y_part);
}

}  // namespace braidset
