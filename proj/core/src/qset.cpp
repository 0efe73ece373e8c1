#include "braidset/qset.hpp"

#include <algorithm>

#include "braidset/error.hpp"

namespace braidset {

QuadraticSet::QuadraticSet(std::string name, std::vector<std::string> labels,
                           std::vector<Pair> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  for (Elem i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw Error(ErrorKind::malformed_document, "empty element label");
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorKind::duplicate_entry, "element label repeated: " + labels_[i]);
  }
  if (table_.size() != n * n)
    throw Error(ErrorKind::incomplete_table, "table has " + std::to_string(table_.size()) +
                                                 " entries, expected " + std::to_string(n * n));
  for (const auto& [a, b] : table_)
    if (a >= n || b >= n) throw Error(ErrorKind::unknown_label, "table value out of range");
}

std::optional<Elem> QuadraticSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem QuadraticSet::index(std::string_view label) const {
  auto e = find(label);
  if (!e) throw Error(ErrorKind::unknown_label, std::string(label));
  return *e;
}

QuadraticSet QuadraticSet::renamed(std::string name) const {
  QuadraticSet q = *this;
  q.name_ = std::move(name);
  return q;
}

Pair apply_r(const QuadraticSet& qs, Elem x, Elem y) { return qs.apply(x, y); }
Elem left_action(const QuadraticSet& qs, Elem x, Elem y) { return qs.left(x, y); }
Elem right_action(const QuadraticSet& qs, Elem x, Elem y) { return qs.right(x, y); }

const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::bijective: return "bijective";
    case Predicate::involutive: return "involutive";
    case Predicate::square_free: return "square_free";
    case Predicate::left_nondegenerate: return "left_nondegenerate";
    case Predicate::right_nondegenerate: return "right_nondegenerate";
    case Predicate::nondegenerate: return "nondegenerate";
    case Predicate::left_2cancellative: return "left_2cancellative";
    case Predicate::right_2cancellative: return "right_2cancellative";
    case Predicate::two_cancellative: return "2cancellative";
  }
  return "?";
}

std::optional<Predicate> predicate_from_string(std::string_view s) {
  for (Predicate p : all_predicates)
    if (s == to_string(p)) return p;
  return std::nullopt;
}

std::string format_pair(const QuadraticSet& qs, Pair p) {
  return "(" + qs.label(p.first) + "," + qs.label(p.second) + ")";
}

std::string format_elems(const QuadraticSet& qs, const std::vector<Elem>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += qs.label(xs[i]);
  }
  return s + ")";
}

namespace {

bool is_bijective(const QuadraticSet& qs) {
  std::vector<bool> seen(qs.table().size(), false);
  for (const auto& [a, b] : qs.table()) {
    std::size_t k = a * qs.size() + b;
    if (seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

void require_bijective(const QuadraticSet& qs, const char* what) {
  if (!is_bijective(qs))
    throw Error(ErrorKind::prerequisite_failed, std::string("bijective (needed by ") + what + ")");
}

// Collisions of L_x (left) or R_x (right): x, y, z with y < z and equal images.
void nondegenerate_side(const QuadraticSet& qs, bool left_side, ConditionReport& rep) {
  const Elem n = static_cast<Elem>(qs.size());
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> first_hit(n, n);
    for (Elem y = 0; y < n; ++y) {
      Elem img = left_side ? qs.left(x, y) : qs.right(y, x);
      if (first_hit[img] == n) {
        first_hit[img] = y;
        continue;
      }
      Elem y0 = first_hit[img];
      std::string text = left_side
                             ? "^" + qs.label(x) + " " + qs.label(y0) + " = ^" + qs.label(x) +
                                   " " + qs.label(y) + " = " + qs.label(img)
                             : qs.label(y0) + "^" + qs.label(x) + " = " + qs.label(y) + "^" +
                                   qs.label(x) + " = " + qs.label(img);
      rep.fail({{x, y0, y}, {img}, {img}, text});
    }
  }
}

void cancellative_side(const QuadraticSet& qs, bool left_side, bool right_side,
                       ConditionReport& rep) {
  const Elem n = static_cast<Elem>(qs.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Pair start{x, y};
      Pair p = qs.apply(x, y);
      for (std::size_t k = 1; p != start; ++k, p = qs.apply(p.first, p.second)) {
        bool bad = (left_side && p.first == x && p.second != y) ||
                   (right_side && p.second == y && p.first != x);
        if (!bad) continue;
        std::string power = k == 1 ? "r" : "r^" + std::to_string(k);
        rep.fail({{x, y, static_cast<Elem>(k)},
                  {p.first, p.second},
                  {x, y},
                  power + format_pair(qs, start) + "=" + format_pair(qs, p)});
        break;
      }
    }
}

}  // namespace

ConditionReport predicate(const QuadraticSet& qs, Predicate which, std::size_t cap) {
  ConditionReport rep(to_string(which), cap);
  const Elem n = static_cast<Elem>(qs.size());
  switch (which) {
    case Predicate::bijective: {
      std::vector<Pair> first_source(n * n, {n, n});
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          Pair img = qs.apply(x, y);
          Pair& prev = first_source[img.first * n + img.second];
          if (prev.first == n) {
            prev = {x, y};
            continue;
          }
          rep.fail({{prev.first, prev.second, x, y},
                    {img.first, img.second},
                    {img.first, img.second},
                    "r" + format_pair(qs, prev) + " = r" + format_pair(qs, {x, y}) + " = " +
                        format_pair(qs, img)});
        }
      break;
    }
    case Predicate::involutive:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          Pair p = qs.apply(x, y);
          Pair q = qs.apply(p.first, p.second);
          if (q != Pair{x, y})
            rep.fail({{x, y}, {q.first, q.second}, {x, y},
                      "r(r" + format_pair(qs, {x, y}) + ")=" + format_pair(qs, q)});
        }
      break;
    case Predicate::square_free:
      for (Elem x = 0; x < n; ++x) {
        Pair p = qs.apply(x, x);
        if (p != Pair{x, x})
          rep.fail({{x}, {p.first, p.second}, {x, x},
                    "r" + format_pair(qs, {x, x}) + "=" + format_pair(qs, p)});
      }
      break;
    case Predicate::left_nondegenerate: nondegenerate_side(qs, true, rep); break;
    case Predicate::right_nondegenerate: nondegenerate_side(qs, false, rep); break;
    case Predicate::nondegenerate:
      nondegenerate_side(qs, true, rep);
      nondegenerate_side(qs, false, rep);
      break;
    case Predicate::left_2cancellative:
      require_bijective(qs, rep.condition.c_str());
      cancellative_side(qs, true, false, rep);
      break;
    case Predicate::right_2cancellative:
      require_bijective(qs, rep.condition.c_str());
      cancellative_side(qs, false, true, rep);
      break;
    case Predicate::two_cancellative:
      require_bijective(qs, rep.condition.c_str());
      cancellative_side(qs, true, true, rep);
      break;
  }
  return rep;
}

bool holds(const QuadraticSet& qs, Predicate which) { return predicate(qs, which, 1).holds; }

PairOrbit pair_orbit(const QuadraticSet& qs, Elem x, Elem y) {
  require_bijective(qs, "pair_orbit");
  PairOrbit orbit;
  orbit.start = {x, y};
  Pair p = orbit.start;
  do {
    orbit.cycle.push_back(p);
    p = qs.apply(p.first, p.second);
  } while (p != orbit.start);
  orbit.length = orbit.cycle.size();
  return orbit;
}

std::vector<Pair> fixed_pairs(const QuadraticSet& qs) {
  std::vector<Pair> out;
  const Elem n = static_cast<Elem>(qs.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (qs.apply(x, y) == Pair{x, y}) out.push_back({x, y});
  return out;
}

TMap t_map(const QuadraticSet& qs) {
  const Elem n = static_cast<Elem>(qs.size());
  std::vector<std::string> missing;
  if (!holds(qs, Predicate::involutive)) missing.push_back("involutive");
  if (!holds(qs, Predicate::right_nondegenerate)) missing.push_back("right_nondegenerate");
  bool r1 = true;
  for (Elem x = 0; x < n && r1; ++x)
    for (Elem y = 0; y < n && r1; ++y)
      for (Elem z = 0; z < n && r1; ++z)
        r1 = qs.right(qs.right(x, y), z) == qs.right(qs.right(x, qs.left(y, z)), qs.right(y, z));
  if (!r1) missing.push_back("r1");
  if (!missing.empty()) {
    std::string what;
    for (const auto& m : missing) what += (what.empty() ? "" : ", ") + m;
    throw Error(ErrorKind::prerequisite_failed, what);
  }

  // R_y^{-1}(y) is the unique x with x^y = y.
  TMap out;
  out.t.assign(n, 0);
  for (Elem y = 0; y < n; ++y)
    for (Elem x = 0; x < n; ++x)
      if (qs.right(x, y) == y) out.t[y] = x;

  out.report = ConditionReport("t_map_intertwines");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      // R_x^{-1}(T(y)) = T(L_x(y))  <=>  R_x(T(L_x(y))) = T(y)
      Elem lhs = qs.right(out.t[qs.left(x, y)], x);
      if (lhs != out.t[y])
        out.report.fail({{x, y}, {lhs}, {out.t[y]},
                         "x=" + qs.label(x) + " y=" + qs.label(y)});
    }
  return out;
}

namespace {

Perm checked_perm(const Perm& p, std::size_t n, const char* what) {
  if (p.size() != n || !is_permutation(p))
    throw Error(ErrorKind::not_a_permutation, std::string(what) + " is not a permutation");
  return p;
}

}  // namespace

QuadraticSet make_permutational(const std::vector<std::string>& labels, const Perm& f,
                                const Perm& g, std::string name) {
  const Elem n = static_cast<Elem>(labels.size());
  checked_perm(f, n, "f");
  checked_perm(g, n, "g");
  std::vector<Pair> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = {g[y], f[x]};
  return QuadraticSet(std::move(name), labels, std::move(table));
}

QuadraticSet make_trivial(const std::vector<std::string>& labels, std::string name) {
  const Elem n = static_cast<Elem>(labels.size());
  std::vector<Pair> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = {y, x};
  return QuadraticSet(std::move(name), labels, std::move(table));
}

QuadraticSet make_identity(const std::vector<std::string>& labels, std::string name) {
  const Elem n = static_cast<Elem>(labels.size());
  std::vector<Pair> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = {x, y};
  return QuadraticSet(std::move(name), labels, std::move(table));
}

QuadraticSet inverse_solution(const QuadraticSet& qs) {
  require_bijective(qs, "inverse_solution");
  const Elem n = static_cast<Elem>(qs.size());
  std::vector<Pair> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Pair p = qs.apply(x, y);
      table[p.first * n + p.second] = {x, y};
    }
  return QuadraticSet(qs.name() + "^-1", qs.labels(), std::move(table));
}

QuadraticSet conjugate(const QuadraticSet& qs, const Perm& phi, std::string name) {
  const Elem n = static_cast<Elem>(qs.size());
  checked_perm(phi, n, "relabeling");
  std::vector<Pair> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Pair p = qs.apply(x, y);
      table[phi[x] * n + phi[y]] = {phi[p.first], phi[p.second]};
    }
  return QuadraticSet(std::move(name), qs.labels(), std::move(table));
}

}  // namespace braidset
