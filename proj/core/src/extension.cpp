#include "braidset/extension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "braidset/error.hpp"
#include "braidset/matched_pair.hpp"

namespace braidset {

namespace {

std::vector<Elem> range(std::size_t from, std::size_t to) {
  std::vector<Elem> v(to - from);
  std::iota(v.begin(), v.end(), static_cast<Elem>(from));
  return v;
}

Word shifted(const Word& w, Elem offset) {
  Word out = w;
  for (Elem& e : out) e += offset;
  return out;
}

Word unshifted(const Word& w, Elem offset) {
  Word out = w;
  for (Elem& e : out) e -= offset;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// Whether `target` lies on the forward r-orbit of `from`.
bool on_orbit(const QuadraticSet& q, Pair from, Pair target, Elem offset = 0) {
  const std::size_t bound = q.size() * q.size() + 1;
  Pair cur{from.first - offset, from.second - offset};
  Pair start = cur;
  Pair goal{target.first - offset, target.second - offset};
  for (std::size_t k = 0; k < bound; ++k) {
    if (cur == goal) return true;
    cur = q.apply(cur.first, cur.second);
    if (cur == start) break;
  }
  return false;
}

bool length3_cancellation(const QuadraticSet& q) {
  TruncatedMonoid tm(q, 3);
  return cancellation_test(tm, 3).holds;
}

bool two_cancellative(const QuadraticSet& q) {
  return holds(q, Predicate::bijective) && holds(q, Predicate::two_cancellative);
}

bool is_trivial_solution(const QuadraticSet& q) {
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < q.size(); ++y)
      if (q.apply(x, y) != Pair{y, x}) return false;
  return true;
}

bool implies(bool a, bool b) { return !a || b; }

}  // namespace

GroundActions GroundActions::trivial(std::size_t nx, std::size_t ny) {
  GroundActions g{nx, ny, {}, {}};
  for (Elem a = 0; a < ny; ++a)
    for (Elem x = 0; x < nx; ++x) {
      g.left.push_back(x);
      g.right.push_back(a);
    }
  return g;
}

ExtensionSet build_extension(const QuadraticSet& x_part, const QuadraticSet& y_part,
                             const GroundActions& ground, std::string name) {
  const std::size_t nx = x_part.size(), ny = y_part.size();
  for (const auto& l : y_part.labels())
    if (x_part.find(l))
      throw Error(ErrorKind::carrier_overlap, "label '" + l + "' occurs in both parts");
  if (ground.nx != nx || ground.ny != ny || ground.left.size() != nx * ny ||
      ground.right.size() != nx * ny)
    throw Error(ErrorKind::incomplete_table, "ground actions need " + std::to_string(nx * ny) +
                                                 " entries");

  AccompanyingActions acc{nx, ny, std::vector<Elem>(nx * ny), std::vector<Elem>(nx * ny)};
  std::vector<char> seen(nx * ny, 0);
  for (Elem a = 0; a < ny; ++a)
    for (Elem x = 0; x < nx; ++x) {
      Elem l = ground.act_left(a, x), r = ground.act_right(a, x);
      if (l >= nx || r >= ny)
        throw Error(ErrorKind::malformed_document, "ground action value out of range");
      std::size_t slot = l * ny + r;
      if (seen[slot])
        throw Error(ErrorKind::not_regular, "(" + y_part.label(a) + "," + x_part.label(x) +
                                                ") maps to (" + x_part.label(l) + "," +
                                                y_part.label(r) + ") already taken");
      seen[slot] = 1;
      acc.tri_r[slot] = a;
      acc.tri_l[slot] = x;
    }

  std::vector<std::string> labels = x_part.labels();
  labels.insert(labels.end(), y_part.labels().begin(), y_part.labels().end());
  const std::size_t nz = nx + ny;
  const Elem off = static_cast<Elem>(nx);
  std::vector<Pair> table(nz * nz);
  for (Elem p = 0; p < nz; ++p)
    for (Elem q = 0; q < nz; ++q) {
      Pair v;
      if (p < nx && q < nx) {
        v = x_part.apply(p, q);
      } else if (p >= nx && q >= nx) {
        Pair w = y_part.apply(p - off, q - off);
        v = {w.first + off, w.second + off};
      } else if (p >= nx) {
        v = {ground.act_left(p - off, q), ground.act_right(p - off, q) + off};
      } else {
        v = {acc.act_tri_r(p, q - off) + off, acc.act_tri_l(p, q - off)};
      }
      table[p * nz + q] = v;
    }
  return {x_part, y_part, ground, std::move(acc),
          QuadraticSet(std::move(name), std::move(labels), std::move(table))};
}

const char* to_string(MixedCondition c) {
  switch (c) {
    case MixedCondition::ml1: return "ml1";
    case MixedCondition::mr1: return "mr1";
    case MixedCondition::ml2: return "ml2";
    case MixedCondition::mr2: return "mr2";
    case MixedCondition::ml1a: return "ml1a";
    case MixedCondition::mr1a: return "mr1a";
    case MixedCondition::ml2w: return "ml2w";
    case MixedCondition::mr2w: return "mr2w";
    case MixedCondition::stu: return "stu";
    case MixedCondition::csla: return "csla";
    case MixedCondition::csra: return "csra";
    case MixedCondition::mixed_weak_cyclic: return "mixed_weak_cyclic";
    case MixedCondition::fixed_pair_l: return "fixed_pair_l";
    case MixedCondition::fixed_pair_r: return "fixed_pair_r";
  }
  return "?";
}

std::optional<MixedCondition> mixed_condition_from_string(std::string_view s) {
  for (MixedCondition c : all_mixed_conditions)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

struct Parts {
  std::vector<Elem> x;
  std::vector<Elem> y;
};

Parts parts_of(const ExtensionSet& e) {
  return {range(0, e.nx()), range(e.nx(), e.nx() + e.ny())};
}

const std::vector<Elem>& pick(const Parts& p, char c) { return c == 'X' ? p.x : p.y; }

// One instance of a Z-condition per triple drawn from the given parts.
void local_instances(const ExtensionSet& ext, Condition cond, std::string_view pattern,
                     ConditionReport& rep, const std::string& name) {
  const QuadraticSet& z = ext.assembled;
  Parts p = parts_of(ext);
  for (Elem a : pick(p, pattern[0]))
    for (Elem b : pick(p, pattern[1]))
      for (Elem c : pick(p, pattern[2])) {
        auto v = evaluate_local(z, cond, a, b, c);
        if (!v.holds())
          rep.fail({{a, b, c}, v.lhs, v.rhs,
                    name + format_elems(z, {a, b, c}) + ": " + format_elems(z, v.lhs) +
                        " != " + format_elems(z, v.rhs)});
      }
}

}  // namespace

ConditionReport check_mixed(const ExtensionSet& ext, MixedCondition cond, std::size_t cap) {
  const QuadraticSet& z = ext.assembled;
  const std::string name = to_string(cond);
  ConditionReport rep(name, cap);
  Parts p = parts_of(ext);
  const Elem off = static_cast<Elem>(ext.nx());
  auto L = [&](Elem a, Elem b) { return z.left(a, b); };
  auto R = [&](Elem a, Elem b) { return z.right(a, b); };
  auto mismatch = [&](std::vector<Elem> args, std::vector<Elem> lhs, std::vector<Elem> rhs,
                      const std::string& tag) {
    std::string text = tag + format_elems(z, args) + ": " + format_elems(z, lhs) +
                       " != " + format_elems(z, rhs);
    rep.fail({std::move(args), std::move(lhs), std::move(rhs), std::move(text)});
  };

  switch (cond) {
    case MixedCondition::ml1: local_instances(ext, Condition::l1, "YYX", rep, name); break;
    case MixedCondition::mr1: local_instances(ext, Condition::r1, "YXX", rep, name); break;
    case MixedCondition::ml2: local_instances(ext, Condition::l2, "YXX", rep, name); break;
    case MixedCondition::mr2: local_instances(ext, Condition::r2, "YYX", rep, name); break;
    case MixedCondition::ml1a: local_instances(ext, Condition::l1, "YXX", rep, name); break;
    case MixedCondition::mr1a: local_instances(ext, Condition::r1, "YYX", rep, name); break;
    case MixedCondition::ml2w:
      for (Elem a : p.y)
        for (Elem x : p.x)
          for (Elem y : p.x) {
            Pair rxy = z.apply(x, y);
            Word lhs = act_left(z, {a}, {rxy.first, rxy.second});
            Word moved = act_left(z, {a}, {x, y});
            if (!on_orbit(ext.x_part, {moved[0], moved[1]}, {lhs[0], lhs[1]}))
              mismatch({a, x, y}, lhs, moved, name);
          }
      break;
    case MixedCondition::mr2w:
      for (Elem x : p.x)
        for (Elem a : p.y)
          for (Elem b : p.y) {
            Pair rab = z.apply(a, b);
            Word lhs = act_right(z, {rab.first, rab.second}, {x});
            Word moved = act_right(z, {a, b}, {x});
            if (!on_orbit(ext.y_part, {moved[0], moved[1]}, {lhs[0], lhs[1]}, off))
              mismatch({x, a, b}, lhs, moved, name);
          }
      break;
    case MixedCondition::stu:
      for (Elem a : p.y)
        for (Elem x : p.x)
          for (Elem y : p.x)
            if (L(R(a, y), x) != L(a, x)) mismatch({a, x, y}, {L(R(a, y), x)}, {L(a, x)}, name);
      for (Elem a : p.y)
        for (Elem b : p.y)
          for (Elem x : p.x)
            if (R(a, L(b, x)) != R(a, x)) mismatch({a, b, x}, {R(a, L(b, x))}, {R(a, x)}, name);
      break;
    case MixedCondition::csla:
      for (Elem a : p.y)
        for (Elem x : p.x)
          for (Elem y : p.x) {
            Elem lhs = L(L(y, a), L(y, x)), rhs = L(L(a, y), L(a, x));
            if (lhs != rhs) mismatch({a, x, y}, {lhs}, {rhs}, name);
          }
      break;
    case MixedCondition::csra:
      for (Elem a : p.y)
        for (Elem b : p.y)
          for (Elem x : p.x) {
            Elem lhs = R(R(a, b), R(x, b)), rhs = R(R(a, x), R(b, x));
            if (lhs != rhs) mismatch({a, b, x}, {lhs}, {rhs}, name);
          }
      break;
    case MixedCondition::mixed_weak_cyclic:
      if (!holds(ext.x_part, Predicate::square_free) || !holds(ext.y_part, Predicate::square_free))
        return ConditionReport::skip(name, "parts not square-free");
      for (Elem a : p.y)
        for (Elem x : p.x) {
          if (L(R(a, x), x) != L(a, x)) mismatch({a, x}, {L(R(a, x), x)}, {L(a, x)}, name);
          if (R(a, L(a, x)) != R(a, x)) mismatch({a, x}, {R(a, L(a, x))}, {R(a, x)}, name);
        }
      break;
    case MixedCondition::fixed_pair_l:
      for (Elem a : p.y)
        for (Elem x : p.x)
          for (Elem y : p.x) {
            if (z.apply(x, y) != Pair{x, y}) continue;
            Word w = act_left(z, {a}, {x, y});
            Pair rw = z.apply(w[0], w[1]);
            if (rw != Pair{w[0], w[1]}) mismatch({a, x, y}, {rw.first, rw.second}, w, name);
          }
      break;
    case MixedCondition::fixed_pair_r:
      for (Elem x : p.x)
        for (Elem a : p.y)
          for (Elem b : p.y) {
            if (z.apply(a, b) != Pair{a, b}) continue;
            Word w = act_right(z, {a, b}, {x});
            Pair rw = z.apply(w[0], w[1]);
            if (rw != Pair{w[0], w[1]}) mismatch({x, a, b}, {rw.first, rw.second}, w, name);
          }
      break;
  }
  return rep;
}

bool holds(const ExtensionSet& ext, MixedCondition cond) {
  auto rep = check_mixed(ext, cond, 1);
  return rep.evaluated() && rep.holds;
}

bool holds_on_parts(const ExtensionSet& ext, Condition cond, std::string_view pattern) {
  if (pattern.size() != 3) throw Error(ErrorKind::malformed_document, "pattern needs 3 parts");
  ConditionReport rep(to_string(cond), 1);
  local_instances(ext, cond, pattern, rep, "");
  return rep.holds;
}

NamedReports extension_invariants(const ExtensionSet& ext) {
  const QuadraticSet& z = ext.assembled;
  const QuadraticSet& xq = ext.x_part;
  const QuadraticSet& yq = ext.y_part;
  NamedReports out;
  auto transfer = [&](Predicate pr) {
    ConditionReport rep(std::string(to_string(pr)) + "_transfer");
    bool zv = holds(z, pr), xv = holds(xq, pr), yv = holds(yq, pr);
    if (zv != (xv && yv))
      rep.fail({{}, {}, {},
                std::string("Z: ") + (zv ? "true" : "false") + ", X: " + (xv ? "true" : "false") +
                    ", Y: " + (yv ? "true" : "false")});
    out.add(std::move(rep));
  };
  transfer(Predicate::bijective);
  transfer(Predicate::involutive);
  transfer(Predicate::square_free);
  if (holds(xq, Predicate::bijective) && holds(yq, Predicate::bijective))
    transfer(Predicate::two_cancellative);
  else
    out.add(ConditionReport::skip("2cancellative_transfer", "parts not bijective"));

  const Elem off = static_cast<Elem>(ext.nx());
  ConditionReport restrict("restriction");
  for (Elem p = 0; p < z.size(); ++p)
    for (Elem q = 0; q < z.size(); ++q) {
      Pair v = z.apply(p, q), expect;
      if (ext.in_x(p) && ext.in_x(q)) {
        expect = xq.apply(p, q);
      } else if (!ext.in_x(p) && !ext.in_x(q)) {
        Pair w = yq.apply(p - off, q - off);
        expect = {w.first + off, w.second + off};
      } else if (!ext.in_x(p)) {
        expect = {ext.ground.act_left(p - off, q), ext.ground.act_right(p - off, q) + off};
      } else {
        expect = {ext.accompanying.act_tri_r(p, q - off) + off,
                  ext.accompanying.act_tri_l(p, q - off)};
      }
      if (v != expect)
        restrict.fail({{p, q}, {v.first, v.second}, {expect.first, expect.second},
                       "r" + format_elems(z, {p, q}) + " = " + format_pair(z, v)});
    }
  out.add(std::move(restrict));

  ConditionReport lara("laraground");
  const auto& g = ext.ground;
  const auto& acc = ext.accompanying;
  for (Elem a = 0; a < ext.ny(); ++a)
    for (Elem x = 0; x < ext.nx(); ++x) {
      Elem l = g.act_left(a, x), r = g.act_right(a, x);
      if (acc.act_tri_r(l, r) != a || acc.act_tri_l(l, r) != x)
        lara.fail({{a + off, x}, {}, {}, "(" + yq.label(a) + "," + xq.label(x) + ")"});
    }
  for (Elem x = 0; x < ext.nx(); ++x)
    for (Elem a = 0; a < ext.ny(); ++a) {
      Elem t = acc.act_tri_r(x, a), s = acc.act_tri_l(x, a);
      if (g.act_left(t, s) != x || g.act_right(t, s) != a)
        lara.fail({{x, a + off}, {}, {}, "(" + xq.label(x) + "," + yq.label(a) + ")"});
    }
  out.add(std::move(lara));
  return out;
}

const char* to_string(ExtensionSuite s) {
  switch (s) {
    case ExtensionSuite::BZ: return "BZ";
    case ExtensionSuite::B_cancellative: return "B_cancellative";
    case ExtensionSuite::matched_pair_ST: return "matched_pair_ST";
    case ExtensionSuite::factorization_bellaT2: return "factorization_bellaT2";
    case ExtensionSuite::trivial_parts: return "trivial_parts";
    case ExtensionSuite::theoremD_squarefree: return "theoremD_squarefree";
  }
  return "?";
}

std::optional<ExtensionSuite> extension_suite_from_string(std::string_view s) {
  for (ExtensionSuite e : all_extension_suites)
    if (s == to_string(e)) return e;
  return std::nullopt;
}

WordActions ground_word_actions(const ExtensionSet& ext) {
  const QuadraticSet z = ext.assembled;
  const Elem off = static_cast<Elem>(ext.nx());
  return {[z, off](const Word& a, const Word& u) { return act_left(z, shifted(a, off), u); },
          [z, off](const Word& a, const Word& u) {
            return unshifted(act_right(z, shifted(a, off), u), off);
          }};
}

WordActions accompanying_word_actions(const ExtensionSet& ext) {
  const QuadraticSet z = ext.assembled;
  const Elem off = static_cast<Elem>(ext.nx());
  return {[z, off](const Word& u, const Word& a) {
            return unshifted(act_left(z, u, shifted(a, off)), off);
          },
          [z, off](const Word& u, const Word& a) { return act_right(z, u, shifted(a, off)); }};
}

namespace {

void suite_bz(const ExtensionSet& ext, SuiteReport& rep) {
  rep.hypotheses = "regular extension";
  const QuadraticSet& z = ext.assembled;
  bool ybe = holds(z, Condition::ybe);
  bool ml1 = holds(ext, MixedCondition::ml1), mr1 = holds(ext, MixedCondition::mr1);
  bool ml2 = holds(ext, MixedCondition::ml2), mr2 = holds(ext, MixedCondition::mr2);
  bool ml1a = holds(ext, MixedCondition::ml1a), mr1a = holds(ext, MixedCondition::mr1a);
  bool x_braided = holds(ext.x_part, Condition::ybe), y_braided = holds(ext.y_part, Condition::ybe);
  rep.fact("ybe", ybe);
  rep.fact("X braided", x_braided);
  rep.fact("Y braided", y_braided);
  rep.fact("ml1", ml1);
  rep.fact("mr1", mr1);
  rep.fact("ml2", ml2);
  rep.fact("mr2", mr2);
  rep.clause("ybe <=> X, Y braided & ml1 & mr1 & ml2 & mr2",
             ybe == (x_braided && y_braided && ml1 && mr1 && ml2 && mr2));

  auto group_a = [&](std::string_view pat) {
    return holds_on_parts(ext, Condition::r1, pat) && holds_on_parts(ext, Condition::l2, pat);
  };
  auto group_b = [&](std::string_view pat) {
    return holds_on_parts(ext, Condition::l1, pat) && holds_on_parts(ext, Condition::r2, pat);
  };
  bool a1 = group_a("YXX"), a2 = group_a("XYX"), a3 = group_a("XXY");
  bool b1 = group_b("YYX"), b2 = group_b("YXY"), b3 = group_b("XYY");
  rep.clause("r1 & l2 agree on YXX, XYX, XXY", a1 == a2 && a2 == a3);
  rep.clause("l1 & r2 agree on YYX, YXY, XYY", b1 == b2 && b2 == b3);
  rep.clause("ml2 => ml1a", implies(ml2, ml1a));
  rep.clause("mr2 => mr1a", implies(mr2, mr1a));
  rep.clause("part transfer and restriction", extension_invariants(ext).all_hold());
}

void suite_b_cancellative(const ExtensionSet& ext, SuiteReport& rep) {
  rep.hypotheses = "X, Y braided and 2-cancellative; S(Z) cancellative on length 3";
  bool parts = holds(ext.x_part, Condition::ybe) && holds(ext.y_part, Condition::ybe) &&
               two_cancellative(ext.x_part) && two_cancellative(ext.y_part);
  rep.hypotheses_met = parts && length3_cancellation(ext.assembled);
  if (!rep.hypotheses_met) return;
  bool ybe = holds(ext.assembled, Condition::ybe);
  bool ml1 = holds(ext, MixedCondition::ml1), mr1 = holds(ext, MixedCondition::mr1);
  bool ml1a = holds(ext, MixedCondition::ml1a), mr1a = holds(ext, MixedCondition::mr1a);
  bool ml2 = holds(ext, MixedCondition::ml2), mr2 = holds(ext, MixedCondition::mr2);
  rep.fact("ybe", ybe);
  rep.fact("ml1a", ml1a);
  rep.fact("mr1a", mr1a);
  rep.clause("ybe <=> ml1 & mr1 & ml1a & mr1a", ybe == (ml1 && mr1 && ml1a && mr1a));
  rep.clause("mr1 & ml1a <=> ml2", (mr1 && ml1a) == ml2);
  rep.clause("ml1 & mr1a <=> mr2", (ml1 && mr1a) == mr2);
}

void suite_matched_pair(const ExtensionSet& ext, SuiteReport& rep, int N) {
  rep.hypotheses = "X, Y braided";
  rep.hypotheses_met = holds(ext.x_part, Condition::ybe) && holds(ext.y_part, Condition::ybe);
  if (!rep.hypotheses_met) return;
  TruncatedMonoid S(ext.x_part, N), T(ext.y_part, N);
  WordSpace SS(S, N), TS(T, N);
  WordActions act = ground_word_actions(ext);
  auto axioms = check_pair_axioms(SS, TS, act.left, act.right, N);
  for (const auto& r : axioms.items) rep.fact(r.condition, r.holds);
  bool local = holds(ext, MixedCondition::ml1) && holds(ext, MixedCondition::mr1) &&
               holds(ext, MixedCondition::ml2w) && holds(ext, MixedCondition::mr2w);
  rep.fact("ml1 & mr1 & ml2w & mr2w", local);
  rep.clause("matched pair (S,T) up to degree " + std::to_string(N) +
                 " <=> ml1 & mr1 & ml2w & mr2w",
             axioms.all_hold() == local);

  // lara relations for the word extension of the accompanying actions.
  WordActions acc = accompanying_word_actions(ext);
  bool lara = true;
  for (int da = 0; da <= N && lara; ++da)
    for (int du = 0; da + du <= N && lara; ++du)
      for (const auto& a : TS.of_degree(da))
        for (const auto& u : SS.of_degree(du)) {
          Word v = act.left(a, u), b = act.right(a, u);
          if (!T.equal(acc.left(v, b), a) || !S.equal(acc.right(v, b), u)) {
            lara = false;
            break;
          }
        }
  rep.fact("lara relations", lara);
  if (local) rep.clause("strong: lara relations hold", lara);
}

// Words of one part viewed inside Z, compared in the part's own monoid.
class PartSpace {
 public:
  using element = Word;

  PartSpace(const TruncatedMonoid& tm, const QuadraticSet& z, Elem offset, int N)
      : tm_(&tm), z_(&z), off_(offset) {
    for (int d = 0; d <= N; ++d) {
      by_degree_.emplace_back();
      for (const auto& w : tm.words(d)) by_degree_.back().push_back(shifted(w, off_));
    }
  }
  element one() const { return {}; }
  element mul(const element& a, const element& b) const { return concat(a, b); }
  bool equal(const element& a, const element& b) const {
    return tm_->equal(unshifted(a, off_), unshifted(b, off_));
  }
  element canonical(const element& a) const {
    return shifted(tm_->canonical(unshifted(a, off_)), off_);
  }
  const std::vector<element>& of_degree(int d) const { return by_degree_[d]; }
  std::string show(const element& a) const { return format_word(*z_, a); }

 private:
  const TruncatedMonoid* tm_;
  const QuadraticSet* z_;
  Elem off_;
  std::vector<std::vector<element>> by_degree_;
};

void suite_factorization(const ExtensionSet& ext, SuiteReport& rep, int N) {
  rep.hypotheses = "Z braided";
  const QuadraticSet& z = ext.assembled;
  rep.hypotheses_met = holds(z, Condition::ybe);
  if (!rep.hypotheses_met) return;
  TruncatedMonoid U(z, N), S(ext.x_part, N), T(ext.y_part, N);
  const Elem off = static_cast<Elem>(ext.nx());

  bool exists = true, unique = true, counts = true;
  for (int n = 0; n <= N; ++n) {
    std::size_t expected = 0;
    for (int i = 0; i <= n; ++i) expected += S.class_count(i) * T.class_count(n - i);
    if (U.class_count(n) != expected) counts = false;
    for (const auto& cls : U.classes_at_degree(n)) {
      const Word* first = nullptr;
      std::size_t split = 0;
      for (const auto& w : cls.members) {
        auto it = std::find_if(w.begin(), w.end(), [&](Elem e) { return !ext.in_x(e); });
        std::size_t k = static_cast<std::size_t>(it - w.begin());
        if (!std::all_of(it, w.end(), [&](Elem e) { return !ext.in_x(e); })) continue;
        if (!first) {
          first = &w;
          split = k;
          continue;
        }
        Word u1(first->begin(), first->begin() + split), u2(w.begin(), w.begin() + k);
        Word a1(first->begin() + split, first->end()), a2(w.begin() + k, w.end());
        if (k != split || !S.equal(u1, u2) || !T.equal(unshifted(a1, off), unshifted(a2, off)))
          unique = false;
      }
      if (!first) exists = false;
    }
  }
  rep.clause("every class of Z-words has a normal form u.a", exists);
  rep.clause("normal forms u.a are unique in S x T", unique);
  rep.clause("class counts of S(Z) equal those of S x T", counts);

  WordSpace US(U, N);
  PartSpace SS(S, z, 0, N), TS(T, z, off, N);
  auto su = check_pair_axioms(
      SS, US, [&](const Word& w, const Word& u) { return act_left(z, w, u); },
      [&](const Word& w, const Word& u) { return act_right(z, w, u); }, N);
  auto ut = check_pair_axioms(
      US, TS, [&](const Word& a, const Word& w) { return act_left(z, a, w); },
      [&](const Word& a, const Word& w) { return act_right(z, a, w); }, N);
  for (const auto& r : su.items) rep.fact("(S,U) " + r.condition, r.holds);
  for (const auto& r : ut.items) rep.fact("(U,T) " + r.condition, r.holds);
  rep.clause("(S,U) is a matched pair", su.all_hold());
  rep.clause("(U,T) is a matched pair", ut.all_hold());
}

void suite_trivial_parts(const ExtensionSet& ext, SuiteReport& rep) {
  rep.hypotheses = "X, Y trivial solutions; S(Z) cancellative on length 3";
  const QuadraticSet& z = ext.assembled;
  rep.hypotheses_met = is_trivial_solution(ext.x_part) && is_trivial_solution(ext.y_part) &&
                       length3_cancellation(z);
  if (!rep.hypotheses_met) return;
  Parts p = parts_of(ext);
  auto L = [&](Elem a, Elem b) { return z.left(a, b); };
  auto R = [&](Elem a, Elem b) { return z.right(a, b); };
  bool e1 = true, e2 = true, e3 = true, e4 = true;
  for (Elem a : p.y)
    for (Elem x : p.x)
      for (Elem y : p.x) {
        if (L(R(a, x), y) != L(a, y)) e1 = false;
        if (R(R(a, x), y) != R(R(a, y), x)) e2 = false;
      }
  for (Elem a : p.y)
    for (Elem b : p.y)
      for (Elem x : p.x) {
        if (R(a, L(b, x)) != R(a, x)) e3 = false;
        if (L(a, L(b, x)) != L(b, L(a, x))) e4 = false;
      }
  bool ml1 = holds(ext, MixedCondition::ml1), mr1 = holds(ext, MixedCondition::mr1);
  bool ml1a = holds(ext, MixedCondition::ml1a), mr1a = holds(ext, MixedCondition::mr1a);
  bool stu = holds(ext, MixedCondition::stu);
  bool ybe = holds(z, Condition::ybe);
  bool union_ = ml1 && mr1 && stu;
  rep.fact("ybe", ybe);
  rep.fact("strong twisted union", union_);
  rep.clause("ml1a <=> ^(a^x) y = ^a y", ml1a == e1);
  rep.clause("mr1 <=> (a^x)^y = (a^y)^x", mr1 == e2);
  rep.clause("mr1a <=> a^(^b x) = a^x", mr1a == e3);
  rep.clause("ml1 <=> ^a(^b x) = ^b(^a x)", ml1 == e4);
  rep.clause("ml1a & mr1a <=> stu", (ml1a && mr1a) == stu);
  rep.clause("ybe <=> strong twisted union", ybe == union_);
}

void suite_theorem_d(const ExtensionSet& ext, SuiteReport& rep) {
  rep.hypotheses = "X, Y nondegenerate and involutive; (S,T) matched pair";
  const QuadraticSet& z = ext.assembled;
  auto good = [](const QuadraticSet& q) {
    return holds(q, Predicate::nondegenerate) && holds(q, Predicate::involutive) &&
           holds(q, Condition::ybe);
  };
  bool mp = holds(ext, MixedCondition::ml1) && holds(ext, MixedCondition::mr1) &&
            holds(ext, MixedCondition::ml2w) && holds(ext, MixedCondition::mr2w);
  rep.hypotheses_met = good(ext.x_part) && good(ext.y_part) && mp;
  if (!rep.hypotheses_met) return;
  bool ybe = holds(z, Condition::ybe);
  bool fl = holds(ext, MixedCondition::fixed_pair_l), fr = holds(ext, MixedCondition::fixed_pair_r);
  bool ml2 = holds(ext, MixedCondition::ml2), mr2 = holds(ext, MixedCondition::mr2);
  rep.fact("ybe", ybe);
  rep.fact("fixed_pair_l", fl);
  rep.fact("fixed_pair_r", fr);
  rep.clause("ml2 <=> fixed_pair_l", ml2 == fl);
  rep.clause("mr2 <=> fixed_pair_r", mr2 == fr);
  rep.clause("ybe <=> fixed_pair_l & fixed_pair_r", ybe == (fl && fr));
  bool sf = holds(ext.x_part, Predicate::square_free) && holds(ext.y_part, Predicate::square_free);
  rep.fact("parts square-free", sf);
  if (!sf) return;
  bool mwc = holds(ext, MixedCondition::mixed_weak_cyclic);
  rep.fact("mixed_weak_cyclic", mwc);
  rep.clause("ybe <=> mixed_weak_cyclic", ybe == mwc);
  rep.clause("ybe => Z square-free & lri",
             implies(ybe, holds(z, Predicate::square_free) && holds(z, Condition::lri)));
}

}  // namespace

SuiteReport verify_extension_theorem(const ExtensionSet& ext, ExtensionSuite which, int degree) {
  SuiteReport rep;
  rep.suite = to_string(which);
  switch (which) {
    case ExtensionSuite::BZ: suite_bz(ext, rep); break;
    case ExtensionSuite::B_cancellative: suite_b_cancellative(ext, rep); break;
    case ExtensionSuite::matched_pair_ST: suite_matched_pair(ext, rep, degree); break;
    case ExtensionSuite::factorization_bellaT2: suite_factorization(ext, rep, degree); break;
    case ExtensionSuite::trivial_parts: suite_trivial_parts(ext, rep); break;
    case ExtensionSuite::theoremD_squarefree: suite_theorem_d(ext, rep); break;
  }
  return rep;
}

ExtensionSet double_braided_set(const QuadraticSet& qs) {
  if (!holds(qs, Condition::ybe)) throw Error(ErrorKind::prerequisite_failed, "ybe");
  std::string suffix = "'";
  auto clashes = [&] {
    for (const auto& l : qs.labels())
      if (qs.find(l + suffix)) return true;
    return false;
  };
  while (clashes()) suffix += "'";
  std::vector<std::string> labels;
  for (const auto& l : qs.labels()) labels.push_back(l + suffix);
  QuadraticSet copy(qs.name() + suffix, labels, qs.table());
  const std::size_t n = qs.size();
  GroundActions g{n, n, {}, {}};
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) {
      g.left.push_back(qs.left(a, x));
      g.right.push_back(qs.right(a, x));
    }
  return build_extension(qs, copy, g, qs.name() + "_double");
}

StrongTwistedUnionReport strong_twisted_union_report(const ExtensionSet& ext) {
  StrongTwistedUnionReport rep;
  auto ml1 = check_mixed(ext, MixedCondition::ml1);
  auto mr1 = check_mixed(ext, MixedCondition::mr1);
  auto stu = check_mixed(ext, MixedCondition::stu);
  rep.action_extension = ml1.holds && mr1.holds;
  rep.stu = stu.holds;
  rep.strong_twisted_union = rep.action_extension && rep.stu;
  rep.conditions.add(std::move(ml1));
  rep.conditions.add(std::move(mr1));
  rep.conditions.add(std::move(stu));
  rep.notes.push_back("action extension checked at monoid level: ml1 and mr1");
  const QuadraticSet& z = ext.assembled;
  rep.ybe = holds(z, Condition::ybe);

  auto csla = check_mixed(ext, MixedCondition::csla);
  auto csra = check_mixed(ext, MixedCondition::csra);
  bool cs = csla.holds && csra.holds;
  rep.conditions.add(std::move(csla));
  rep.conditions.add(std::move(csra));
  bool hyp = holds(z, Condition::lri) && two_cancellative(ext.x_part) &&
             two_cancellative(ext.y_part) && length3_cancellation(z);
  rep.prop_hypotheses = hyp;
  if (hyp && rep.strong_twisted_union)
    rep.prop_biconditional = rep.ybe == cs;
  else
    rep.notes.push_back("csla/csra biconditional not applicable");
  return rep;
}

const char* to_string(ExtensionFilter f) {
  switch (f) {
    case ExtensionFilter::ybe: return "ybe";
    case ExtensionFilter::square_free: return "square_free";
    case ExtensionFilter::involutive: return "involutive";
    case ExtensionFilter::lri: return "lri";
    case ExtensionFilter::stu: return "stu";
  }
  return "?";
}

std::optional<ExtensionFilter> extension_filter_from_string(std::string_view s) {
  for (ExtensionFilter f : {ExtensionFilter::ybe, ExtensionFilter::square_free,
                            ExtensionFilter::involutive, ExtensionFilter::lri, ExtensionFilter::stu})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

bool passes(const ExtensionSet& ext, ExtensionFilter f) {
  switch (f) {
    case ExtensionFilter::ybe: return holds(ext.assembled, Condition::ybe);
    case ExtensionFilter::square_free: return holds(ext.assembled, Predicate::square_free);
    case ExtensionFilter::involutive: return holds(ext.assembled, Predicate::involutive);
    case ExtensionFilter::lri: return holds(ext.assembled, Condition::lri);
    case ExtensionFilter::stu: return holds(ext, MixedCondition::stu);
  }
  return false;
}

GroundActions family_ground(const QuadraticSet& x_part, const QuadraticSet& y_part,
                            const PermutationFamily& family,
                            const std::vector<std::size_t>& choice) {
  const std::size_t nx = x_part.size(), ny = y_part.size(), nz = nx + ny;
  if (choice.size() != family.slots.size())
    throw Error(ErrorKind::malformed_document, "one choice per slot required");
  std::vector<Perm> left(nz, identity_perm(nz)), right(nz, identity_perm(nz));
  std::vector<char> has_right(nz, 0);
  for (std::size_t s = 0; s < family.slots.size(); ++s) {
    const FamilyOption& opt = family.slots[s].options.at(choice[s]);
    for (const auto& asg : opt.left)
      for (Elem e : asg.elements) left[e] = compose(asg.perm, left[e]);
    for (const auto& asg : opt.right)
      for (Elem e : asg.elements) {
        right[e] = compose(asg.perm, right[e]);
        has_right[e] = 1;
      }
  }
  GroundActions g{nx, ny, {}, {}};
  for (Elem a = 0; a < ny; ++a)
    for (Elem x = 0; x < nx; ++x) {
      Elem l = left[nx + a][x];
      const Perm& rx = has_right[x] || !family.lri_completion ? right[x] : inverse(left[x]);
      Elem r = rx[nx + a];
      if (l >= nx || r < nx)
        throw Error(ErrorKind::not_regular, "actions of Y on X must preserve the parts");
      g.left.push_back(l);
      g.right.push_back(static_cast<Elem>(r - nx));
    }
  return g;
}

EnumerationSummary enumerate_extensions(const QuadraticSet& x_part, const QuadraticSet& y_part,
                                        const EnumerationOptions& options,
                                        const std::function<bool(const ExtensionSet&)>& emit) {
  EnumerationSummary sum;
  auto consider = [&](const GroundActions& g, const std::string& name) {
    ++sum.visited;
    std::optional<ExtensionSet> ext;
    try {
      ext = build_extension(x_part, y_part, g, name);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_regular) throw;
      return true;
    }
    ++sum.regular;
    for (ExtensionFilter f : options.filters)
      if (!passes(*ext, f)) return true;
    ++sum.emitted;
    if (!emit(*ext)) {
      sum.truncated = true;
      return false;
    }
    if (options.limit && sum.emitted >= options.limit) {
      sum.truncated = true;
      return false;
    }
    return true;
  };

  const std::size_t nx = x_part.size(), ny = y_part.size();
  if (options.mode == EnumerationMode::full_table) {
    const std::size_t cells = nx * ny;
    if (cells > options.table_budget)
      throw Error(ErrorKind::budget_exceeded, "|X|*|Y| = " + std::to_string(cells) +
                                                  " exceeds the table budget of " +
                                                  std::to_string(options.table_budget));
    std::vector<Elem> codes = range(0, cells);
    std::size_t k = 0;
    do {
      GroundActions g{nx, ny, {}, {}};
      for (Elem c : codes) {
        g.left.push_back(static_cast<Elem>(c / ny));
        g.right.push_back(static_cast<Elem>(c % ny));
      }
      if (!consider(g, "Z" + std::to_string(k++))) break;
    } while (std::next_permutation(codes.begin(), codes.end()));
    return sum;
  }

  if (!options.family) throw Error(ErrorKind::malformed_document, "permutation family missing");
  const PermutationFamily& fam = *options.family;
  for (const auto& s : fam.slots)
    if (s.options.empty()) return sum;
  std::vector<std::size_t> choice(fam.slots.size(), 0);
  while (true) {
    std::string name;
    for (std::size_t s = 0; s < choice.size(); ++s)
      name += (s ? "+" : "") + fam.slots[s].options[choice[s]].name;
    std::optional<GroundActions> g;
    try {
      g = family_ground(x_part, y_part, fam, choice);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_regular) throw;
      ++sum.visited;
    }
    if (g && !consider(*g, name.empty() ? "Z" : name)) break;
    std::size_t s = choice.size();
    while (s > 0) {
      --s;
      if (++choice[s] < fam.slots[s].options.size()) break;
      choice[s] = 0;
      if (s == 0) return sum;
    }
    if (choice.empty()) return sum;
  }
  return sum;
}

namespace {

struct Accompanying {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<Word, Word>> table;
  bool bijective = true;
  std::string witness;
};

// Inverts (a, u) -> (^a u, a^u) on classes up to total degree N.
Accompanying invert_pair(const TruncatedMonoid& S, const TruncatedMonoid& T,
                         const WordActions& act, int N) {
  Accompanying acc;
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;  // |u| = i, |a| = j
      auto us = S.classes_at_degree(i);
      auto as = T.classes_at_degree(j);
      for (const auto& a : as)
        for (const auto& u : us) {
          Word v = S.canonical(act.left(a.canonical, u.canonical));
          Word b = T.canonical(act.right(a.canonical, u.canonical));
          auto key = std::make_pair(S.code(v) * 1000003ULL + v.size(), T.code(b) * 1000003ULL + b.size());
          if (!acc.table.emplace(key, std::make_pair(a.canonical, u.canonical)).second) {
            if (acc.bijective)
              acc.witness = "two preimages of (" + format_word(S.base(), v) + ", " +
                            format_word(T.base(), b) + ")";
            acc.bijective = false;
          }
        }
    }
  return acc;
}

}  // namespace

NamedReports m3_extension_check(const TruncatedMonoid& S, const TruncatedMonoid& T,
                                const WordActions& act, int N,
                                const TruncatedMonoid* realization) {
  if (!S.braided() || !T.braided())
    throw Error(ErrorKind::prerequisite_failed, "ybe (S and T need braided bases)");
  const QuadraticSet& sb = S.base();
  const QuadraticSet& tb = T.base();
  WordSpace SS(S, N), TS(T, N);
  NamedReports out;
  for (auto r : check_pair_axioms(SS, TS, act.left, act.right, N).items) {
    r.condition = "(S,T) " + r.condition;
    out.add(std::move(r));
  }

  Accompanying acc = invert_pair(S, T, act, N);
  ConditionReport strong("strong");
  if (!acc.bijective) strong.fail({{}, {}, {}, acc.witness});
  std::size_t total = 0;
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i) total += S.class_count(i) * T.class_count(n - i);
  if (acc.table.size() != total)
    strong.fail({{}, {}, {}, "r_{T,S} is not onto the classes of S x T"});
  out.add(strong);

  ConditionReport ml1a("ml1a"), lr3a("lr3a"), mr1a("mr1a"), lr3b("lr3b");
  for (int du = 0; du <= N; ++du)
    for (int dv = 0; du + dv <= N; ++dv)
      for (int da = 0; du + dv + da <= N; ++da)
        for (const auto& u : SS.of_degree(du))
          for (const auto& v : SS.of_degree(dv))
            for (const auto& a : TS.of_degree(da)) {
              Word au = act.left(a, u), a_u = act.right(a, u);
              Word lhs = act_left(sb, au, act.left(a_u, v));
              Word rhs = act.left(a, act_left(sb, u, v));
              std::string where = "u=" + SS.show(u) + " v=" + SS.show(v) + " a=" + TS.show(a);
              if (!S.equal(lhs, rhs)) ml1a.fail({{}, lhs, rhs, where});
              lhs = act_right(sb, au, act.left(a_u, v));
              rhs = act.left(act.right(a, act_left(sb, u, v)), act_right(sb, u, v));
              if (!S.equal(lhs, rhs)) lr3a.fail({{}, lhs, rhs, where});
            }
  for (int da = 0; da <= N; ++da)
    for (int db = 0; da + db <= N; ++db)
      for (int du = 0; da + db + du <= N; ++du)
        for (const auto& a : TS.of_degree(da))
          for (const auto& b : TS.of_degree(db))
            for (const auto& u : SS.of_degree(du)) {
              Word bu = act.left(b, u), b_u = act.right(b, u);
              Word lhs = act.right(act_right(tb, a, b), u);
              Word rhs = act.right(act_right(tb, a, bu), b_u);
              std::string where = "a=" + TS.show(a) + " b=" + TS.show(b) + " u=" + SS.show(u);
              if (!T.equal(lhs, rhs)) mr1a.fail({{}, lhs, rhs, where});
              lhs = act.right(act_left(tb, a, b), act.left(act_right(tb, a, b), u));
              rhs = act_left(tb, act.right(a, bu), b_u);
              if (!T.equal(lhs, rhs)) lr3b.fail({{}, lhs, rhs, where});
            }
  for (auto* r : {&ml1a, &lr3a, &mr1a, &lr3b}) out.add(std::move(*r));

  // r_U = (r_{T,S}^{-1})^{23} r_T^{34} r_S^{12} r_{T,S}^{23} on normal forms (v,b),(u,a).
  using Element = DoubleProduct::Element;
  auto tri = [&](const Word& u, const Word& a) -> std::optional<std::pair<Word, Word>> {
    Word cu = S.canonical(u), ca = T.canonical(a);
    auto key = std::make_pair(S.code(cu) * 1000003ULL + cu.size(), T.code(ca) * 1000003ULL + ca.size());
    auto it = acc.table.find(key);
    if (it == acc.table.end()) return std::nullopt;
    return it->second;
  };
  auto r_u = [&](const Element& x, const Element& y) -> std::optional<std::pair<Element, Element>> {
    const Word &v = x.first, &b = x.second, &u = y.first, &a = y.second;
    Word bu = act.left(b, u), b_u = act.right(b, u);
    Word s1 = act_left(sb, v, bu), s_mid = act_right(sb, v, bu);
    Word t_mid = act_left(tb, b_u, a), t2 = act_right(tb, b_u, a);
    auto inv = tri(s_mid, t_mid);
    if (!inv) return std::nullopt;
    return std::make_pair(Element{s1, inv->first}, Element{inv->second, t2});
  };

  DoubleProduct dp(S, T, act, N);
  ProductSpace P(dp, N);
  ConditionReport m3("M3(U)"), ybe("ybe(U)"), agree("r_U realization");
  for (int d1 = 0; d1 <= N; ++d1)
    for (int d2 = 0; d1 + d2 <= N; ++d2)
      for (const auto& x : P.of_degree(d1))
        for (const auto& y : P.of_degree(d2)) {
          auto r = r_u(x, y);
          std::string where = P.show(x) + " " + P.show(y);
          if (!r) {
            m3.fail({{}, {}, {}, "no accompanying value at " + where});
            continue;
          }
          if (!dp.equal(dp.mul(x, y), dp.mul(r->first, r->second))) m3.fail({{}, {}, {}, where});
          if (realization) {
            const Elem off = static_cast<Elem>(sb.size());
            Word w1 = concat(x.first, shifted(x.second, off));
            Word w2 = concat(y.first, shifted(y.second, off));
            Word l = concat(r->first.first, shifted(r->first.second, off));
            Word rr = concat(r->second.first, shifted(r->second.second, off));
            const QuadraticSet& zb = realization->base();
            if (!realization->equal(act_left(zb, w1, w2), l) ||
                !realization->equal(act_right(zb, w1, w2), rr))
              agree.fail({{}, {}, {}, where});
          }
        }
  for (int d1 = 0; d1 <= N; ++d1)
    for (int d2 = 0; d1 + d2 <= N; ++d2)
      for (int d3 = 0; d1 + d2 + d3 <= N; ++d3)
        for (const auto& x : P.of_degree(d1))
          for (const auto& y : P.of_degree(d2))
            for (const auto& w : P.of_degree(d3)) {
              std::vector<Element> a{x, y, w}, b{x, y, w};
              auto step = [&](std::vector<Element>& t, int i) {
                auto r = r_u(t[i], t[i + 1]);
                if (!r) return false;
                t[i] = r->first;
                t[i + 1] = r->second;
                return true;
              };
              bool ok = step(a, 0) && step(a, 1) && step(a, 0) && step(b, 1) && step(b, 0) &&
                        step(b, 1);
              for (int i = 0; ok && i < 3; ++i) ok = dp.equal(a[i], b[i]);
              if (!ok) ybe.fail({{}, {}, {}, P.show(x) + " " + P.show(y) + " " + P.show(w)});
            }
  out.add(std::move(m3));
  ConditionReport transfer("braided_transfer");
  if (ybe.holds != (S.braided() && T.braided()))
    transfer.fail({{}, {}, {}, "r_U braided differs from S, T braided"});
  out.add(std::move(ybe));
  out.add(std::move(transfer));
  if (realization)
    out.add(std::move(agree));
  else
    out.add(ConditionReport::skip("r_U realization", "no realization given"));
  return out;
}

namespace {

bool is_automorphism(const QuadraticSet& q, const Perm& t) {
  if (!is_permutation(t)) return false;
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < q.size(); ++y) {
      Pair a = q.apply(t[x], t[y]);
      Pair b = q.apply(x, y);
      if (a != Pair{t[b.first], t[b.second]}) return false;
    }
  return true;
}

bool all_aut(const std::vector<AutomorphismCheck>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.automorphism; });
}

}  // namespace

bool AutomorphismReport::all_y_on_x() const { return all_aut(y_on_x); }
bool AutomorphismReport::all_x_on_y() const { return all_aut(x_on_y); }
bool AutomorphismReport::all_z_on_z() const { return all_aut(z_on_z); }

AutomorphismReport automorphism_action_check(const ExtensionSet& ext) {
  AutomorphismReport rep;
  const QuadraticSet& z = ext.assembled;
  const std::size_t nx = ext.nx(), ny = ext.ny();
  for (Elem a = 0; a < ny; ++a) {
    Perm t(nx);
    for (Elem x = 0; x < nx; ++x) t[x] = ext.ground.act_left(a, x);
    rep.y_on_x.push_back({ext.y_part.label(a), "X", is_automorphism(ext.x_part, t)});
  }
  for (Elem x = 0; x < nx; ++x) {
    Perm t(ny), s(ny);
    for (Elem a = 0; a < ny; ++a) {
      t[a] = ext.accompanying.act_tri_r(x, a);
      s[a] = ext.ground.act_right(a, x);
    }
    rep.x_on_y.push_back({ext.x_part.label(x), "Y", is_automorphism(ext.y_part, t)});
    rep.x_on_y_right.push_back({ext.x_part.label(x), "Y", is_automorphism(ext.y_part, s)});
  }
  for (Elem p = 0; p < z.size(); ++p) {
    Perm t(z.size());
    for (Elem q = 0; q < z.size(); ++q) t[q] = z.left(p, q);
    rep.z_on_z.push_back({z.label(p), "Z", is_automorphism(z, t)});
  }
  bool ydiag = true, xdiag = true;
  for (Elem a = 0; a < ny; ++a)
    for (Elem x = 0; x < nx; ++x)
      for (Elem y = 0; y < nx; ++y)
        if (ext.ground.act_left(ext.ground.act_right(a, x), y) != ext.ground.act_left(a, y))
          ydiag = false;
  for (Elem x = 0; x < nx; ++x)
    for (Elem a = 0; a < ny; ++a)
      for (Elem b = 0; b < ny; ++b)
        if (ext.ground.act_right(a, ext.ground.act_left(b, x)) != ext.ground.act_right(a, x))
          xdiag = false;
  rep.y_diagonal_on_x = ydiag;
  rep.x_diagonal_on_y = xdiag;
  return rep;
}

}  // namespace braidset
