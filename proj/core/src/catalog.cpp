#include "braidset/catalog.hpp"

#include <map>

#include "braidset/conditions.hpp"
#include "braidset/error.hpp"
#include "braidset/graph.hpp"
#include "json.hpp"

namespace braidset {

namespace {

Perm cycles(const std::vector<std::string>& labels, const std::string& text) {
  std::map<std::string, Elem, std::less<>> index;
  for (Elem i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  return parse_cycles(text, labels.size(), [&](std::string_view l) -> std::optional<Elem> {
    auto it = index.find(l);
    if (it == index.end()) return std::nullopt;
    return it->second;
  });
}

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// r(a, b) = (L_a(b), L_b^{-1}(a)).
QuadraticSet from_left_lri(std::string name, const std::vector<std::string>& labels,
                           const std::vector<Perm>& L) {
  const std::size_t n = labels.size();
  std::vector<Perm> Linv;
  for (const auto& p : L) Linv.push_back(inverse(p));
  std::vector<Pair> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a * n + b] = {L[a][b], Linv[b][a]};
  return QuadraticSet(std::move(name), labels, std::move(table));
}

std::vector<std::string> x_labels() {
  return concat(concat(numbered("x", 4), numbered("y", 4)), numbered("z", 4));
}

std::vector<std::string> y_labels() { return concat(numbered("alpha", 3), numbered("beta", 3)); }

std::vector<std::string> z_labels() { return concat(x_labels(), y_labels()); }

const std::string rho = "(x1 x2 x3 x4)";
const std::string sigma = "(y1 y2 y3 y4)";
const std::string tau = "(z1 z2 z3 z4)";
const std::string tau_inv = "(z4 z3 z2 z1)";

}  // namespace

QuadraticSet sec5_x() {
  auto labels = x_labels();
  auto c = [&](const std::string& t) { return cycles(labels, t); };
  Perm lx13 = c(sigma + tau + "(x2 x4)"), lx24 = c(sigma + tau + "(x1 x3)");
  Perm ly13 = c(rho + tau_inv + "(y2 y4)"), ly24 = c(rho + tau_inv + "(y1 y3)");
  Perm lz13 = c(rho + sigma + "(z2 z4)"), lz24 = c(rho + sigma + "(z1 z3)");
  std::vector<Perm> L{lx13, lx24, lx13, lx24, ly13, ly24, ly13, ly24, lz13, lz24, lz13, lz24};
  return from_left_lri("sec5_X", labels, L);
}

QuadraticSet sec5_y() {
  auto labels = y_labels();
  Perm f = cycles(labels, "(alpha1 alpha2 alpha3)");
  Perm g = cycles(labels, "(beta1 beta2 beta3)");
  std::vector<Perm> L{g, g, g, f, f, f};
  return from_left_lri("sec5_Y", labels, L);
}

PermutationFamily sec5_family() {
  const auto z = z_labels();
  auto c = [&](const std::string& t) { return cycles(z, t); };
  std::vector<Elem> xs, ys_alpha, ys_beta, xy, zz;
  for (Elem i = 0; i < 8; ++i) xy.push_back(i);
  for (Elem i = 8; i < 12; ++i) zz.push_back(i);
  for (Elem i = 12; i < 15; ++i) ys_alpha.push_back(i);
  for (Elem i = 15; i < 18; ++i) ys_beta.push_back(i);
  std::vector<Elem> ys = ys_alpha;
  ys.insert(ys.end(), ys_beta.begin(), ys_beta.end());

  auto on_y = [&](std::string name, const std::string& p) {
    return FamilyOption{std::move(name), {{ys, c(p)}}, {}};
  };
  FamilySlot a{"Y on x u y", {}};
  const std::string theta = "(x1 y1 x2 y2 x3 y3 x4 y4)";
  for (int k : {1, 3, 5, 7})
    a.options.push_back({"theta^" + std::to_string(k), {{ys, power(c(theta), k)}}, {}});
  a.options.push_back(on_y("vartheta", "(x1 y1 x3 y3)(x2 y2 x4 y4)"));
  a.options.push_back(on_y("vartheta^-1", "(y3 x3 y1 x1)(y4 x4 y2 x2)"));
  for (int i = 0; i <= 3; ++i) {
    std::string p;
    for (int j = 1; j <= 4; ++j)
      p += "(x" + std::to_string(j) + " y" + std::to_string((j - 1 + i) % 4 + 1) + ")";
    a.options.push_back(on_y("sigma^" + std::to_string(i) + " pairing", p));
  }

  FamilySlot b{"Y on z", {}};
  auto split = [&](std::string name, const std::string& pa, const std::string& pb) {
    return FamilyOption{std::move(name), {{ys_alpha, c(pa)}, {ys_beta, c(pb)}}, {}};
  };
  b.options.push_back(split("a", tau, tau_inv));
  b.options.push_back(split("b", tau_inv, tau));
  b.options.push_back(split("c", "(z1 z2)(z3 z4)", "(z1 z2)(z3 z4)"));
  b.options.push_back(split("d", "(z1 z4)(z2 z3)", "(z1 z4)(z2 z3)"));
  b.options.push_back(split("e", "(z1 z3)", "(z1 z3)"));
  b.options.push_back(split("f", "(z2 z4)", "(z2 z4)"));
  b.options.push_back(split("g", "(z1 z3)(z2 z4)", ""));
  b.options.push_back(split("h", "", "(z1 z3)(z2 z4)"));

  FamilySlot d{"x u y on Y", {}};
  const std::string pi = "(alpha1 beta1 alpha2 beta2 alpha3 beta3)";
  for (int q : {1, 3, 5})
    d.options.push_back({"pi^" + std::to_string(q), {{xy, power(c(pi), q)}}, {}});
  for (int k = 0; k <= 2; ++k) {
    std::string p;
    for (int j = 1; j <= 3; ++j)
      p += "(alpha" + std::to_string(j) + " beta" + std::to_string((j - 1 + k) % 3 + 1) + ")";
    d.options.push_back({"g^" + std::to_string(k) + " pairing", {{xy, c(p)}}, {}});
  }

  FamilySlot e{"z on Y", {}};
  Perm fg = c("(alpha1 alpha2 alpha3)(beta1 beta2 beta3)");
  for (int k = 0; k <= 2; ++k)
    e.options.push_back({"(fg)^" + std::to_string(k), {{zz, power(fg, k)}}, {}});

  return {{a, b, d, e}, true};
}

std::vector<std::size_t> sec5_choice(int which) {
  switch (which) {
    case 1: return {0, 0, 0, 1};
    case 2: return {4, 6, 3, 2};
    case 3: return {6, 2, 2, 0};
  }
  throw Error(ErrorKind::unknown_label, "extension " + std::to_string(which));
}

ExtensionSet sec5_extension(int which) {
  QuadraticSet x = sec5_x(), y = sec5_y();
  GroundActions g = family_ground(x, y, sec5_family(), sec5_choice(which));
  return build_extension(x, y, g, "sec5_Z" + std::to_string(which));
}

std::vector<std::string> catalog_keys() {
  return {"trivial_ab", "identity_ab", "trivial_c", "sec22_rho", "sec22_l1r1", "perm_sym3",
          "sec5_X",     "sec5_Y",      "sec5_Z1",   "sec5_Z2",   "sec5_Z3"};
}

CatalogEntry catalog_entry(std::string_view key) {
  const std::vector<std::string> ab{"a", "b"}, xyz{"x", "y", "z"}, abc{"a", "b", "c"};
  if (key == "trivial_ab") return {"trivial_ab", "trivial solution on {a,b}", make_trivial(ab, "trivial_ab"), {}};
  if (key == "identity_ab")
    return {"identity_ab", "identity map on {a,b}, degenerate", make_identity(ab, "identity_ab"), {}};
  if (key == "trivial_c") return {"trivial_c", "trivial solution on {c}", make_trivial({"c"}, "trivial_c"), {}};
  if (key == "sec22_rho")
    return {"sec22_rho", "r(a,b) = (rho(b), a) with rho = (x y z); braided, not involutive",
            make_permutational(xyz, identity_perm(3), cycles(xyz, "(x y z)"), "sec22_rho"), {}};
  if (key == "sec22_l1r1")
    return {"sec22_l1r1", "r(a,b) = ((x z y)(b), (x z)(a)); l1 and r1 hold, YBE fails",
            make_permutational(xyz, cycles(xyz, "(x z)"), cycles(xyz, "(x z y)"), "sec22_l1r1"), {}};
  if (key == "perm_sym3")
    return {"perm_sym3", "symmetric permutational set, f = g^{-1}, g = (a b c)",
            make_permutational(abc, cycles(abc, "(a c b)"), cycles(abc, "(a b c)"), "perm_sym3"), {}};
  if (key == "sec5_X")
    return {"sec5_X", "12-element square-free symmetric set with orbits x, y, z", sec5_x(), {}};
  if (key == "sec5_Y")
    return {"sec5_Y", "6-element square-free symmetric set with orbits alpha, beta", sec5_y(), {}};
  for (int k = 1; k <= 3; ++k)
    if (key == "sec5_Z" + std::to_string(k)) {
      ExtensionSet ext = sec5_extension(k);
      QuadraticSet z = ext.assembled;
      return {std::string(key), "extension " + std::to_string(k) + " of sec5_X by sec5_Y",
              std::move(z), std::move(ext)};
    }
  throw Error(ErrorKind::unknown_label, "no catalog entry '" + std::string(key) + "'");
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& k : catalog_keys()) out.push_back(catalog_entry(k));
  return out;
}

std::string catalog_profile(const CatalogEntry& entry) {
  using json = nlohmann::ordered_json;
  const QuadraticSet& q = entry.solution;
  json j;
  j["key"] = entry.key;
  j["size"] = q.size();
  json cls = json::object();
  for (const auto& [name, rep] : classify(q, 1)) {
    json r;
    r["holds"] = rep.holds;
    if (!rep.evaluated()) r["skipped"] = rep.skipped;
    else if (!rep.witnesses.empty()) r["witness"] = rep.witnesses.front().text;
    cls[name] = std::move(r);
  }
  j["classify"] = std::move(cls);
  json orbits = json::array();
  for (const auto& block : orbit_partition(q).blocks) {
    json b = json::array();
    for (Elem e : block) b.push_back(q.label(e));
    orbits.push_back(std::move(b));
  }
  j["orbits"] = std::move(orbits);
  if (entry.extension) {
    json mixed = json::object();
    for (MixedCondition m : all_mixed_conditions) {
      auto rep = check_mixed(*entry.extension, m, 1);
      mixed[to_string(m)] = rep.evaluated() ? json(rep.holds) : json(rep.skipped);
    }
    j["mixed"] = std::move(mixed);
    json suites = json::object();
    for (ExtensionSuite s : {ExtensionSuite::BZ, ExtensionSuite::theoremD_squarefree})
      suites[to_string(s)] = verify_extension_theorem(*entry.extension, s).ok();
    j["suites"] = std::move(suites);
  }
  return j.dump(2) + "\n";
}

}  // namespace braidset
