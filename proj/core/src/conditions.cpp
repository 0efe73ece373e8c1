#include "braidset/conditions.hpp"

#include "braidset/error.hpp"
#include "braidset/monoid.hpp"

namespace braidset {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::l1: return "l1";
    case Condition::r1: return "r1";
    case Condition::lr3: return "lr3";
    case Condition::l2: return "l2";
    case Condition::r2: return "r2";
    case Condition::cl1: return "cl1";
    case Condition::cl2: return "cl2";
    case Condition::cr1: return "cr1";
    case Condition::cr2: return "cr2";
    case Condition::lri: return "lri";
    case Condition::csl: return "csl";
    case Condition::csr: return "csr";
    case Condition::weak_cyclic: return "weak_cyclic";
    case Condition::cyclic: return "cyclic";
    case Condition::ybe: return "ybe";
  }
  return "?";
}

std::optional<Condition> condition_from_string(std::string_view s) {
  for (Condition c : all_conditions)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

int arity(Condition c) {
  switch (c) {
    case Condition::cl1:
    case Condition::cl2:
    case Condition::cr1:
    case Condition::cr2:
    case Condition::lri:
    case Condition::weak_cyclic:
    case Condition::cyclic: return 2;
    default: return 3;
  }
}

namespace {

std::vector<Elem> ybe_side(const QuadraticSet& q, Elem x, Elem y, Elem z, bool starts_12) {
  std::vector<Elem> w{x, y, z};
  for (int step = 0; step < 3; ++step) {
    bool at12 = (step % 2 == 0) == starts_12;
    std::size_t i = at12 ? 0 : 1;
    Pair p = q.apply(w[i], w[i + 1]);
    w[i] = p.first;
    w[i + 1] = p.second;
  }
  return w;
}

}  // namespace

LocalValue evaluate_local(const QuadraticSet& q, Condition cond, Elem x, Elem y, Elem z) {
  auto L = [&](Elem a, Elem b) { return q.left(a, b); };
  auto R = [&](Elem a, Elem b) { return q.right(a, b); };
  switch (cond) {
    case Condition::l1: return {{L(x, L(y, z))}, {L(L(x, y), L(R(x, y), z))}};
    case Condition::r1: return {{R(R(x, y), z)}, {R(R(x, L(y, z)), R(y, z))}};
    case Condition::lr3: return {{R(L(x, y), L(R(x, y), z))}, {L(R(x, L(y, z)), R(y, z))}};
    case Condition::l2: {
      // r(^x(y,z)) against ^x(r(y,z))
      Pair p = q.apply(L(x, y), L(R(x, y), z));
      Elem a = L(y, z), b = R(y, z);
      return {{p.first, p.second}, {L(x, a), L(R(x, a), b)}};
    }
    case Condition::r2: {
      // r((x,y)^z) against (r(x,y))^z
      Pair p = q.apply(R(x, L(y, z)), R(y, z));
      Elem a = L(x, y), b = R(x, y);
      return {{p.first, p.second}, {R(a, L(b, z)), R(b, z)}};
    }
    case Condition::cl1: return {{L(R(y, x), x)}, {L(y, x)}};
    case Condition::cr1: return {{R(x, L(x, y))}, {R(x, y)}};
    case Condition::cl2: return {{L(L(x, y), x)}, {L(y, x)}};
    case Condition::cr2: return {{R(x, R(y, x))}, {R(x, y)}};
    case Condition::lri: return {{R(L(x, y), x), L(x, R(y, x))}, {y, y}};
    case Condition::csl: return {{L(L(y, z), L(y, x))}, {L(L(z, y), L(z, x))}};
    case Condition::csr: return {{R(R(x, y), R(z, y))}, {R(R(x, z), R(y, z))}};
    case Condition::ybe: return {ybe_side(q, x, y, z, true), ybe_side(q, x, y, z, false)};
    case Condition::weak_cyclic: {
      auto a = evaluate_local(q, Condition::cl1, x, y);
      auto b = evaluate_local(q, Condition::cr1, x, y);
      return {{a.lhs[0], b.lhs[0]}, {a.rhs[0], b.rhs[0]}};
    }
    case Condition::cyclic: {
      std::vector<Elem> lhs, rhs;
      for (Condition c : {Condition::cl1, Condition::cl2, Condition::cr1, Condition::cr2}) {
        auto v = evaluate_local(q, c, x, y);
        lhs.push_back(v.lhs[0]);
        rhs.push_back(v.rhs[0]);
      }
      return {lhs, rhs};
    }
  }
  return {};
}

bool check_local(const QuadraticSet& qs, Condition cond, Elem a, Elem b, Elem c) {
  switch (cond) {
    case Condition::l1:
    case Condition::r1:
    case Condition::lr3:
    case Condition::l2:
    case Condition::r2:
    case Condition::ybe: return evaluate_local(qs, cond, a, b, c).holds();
    default:
      throw Error(ErrorKind::malformed_document,
                  std::string("check_local does not accept ") + to_string(cond));
  }
}

namespace {

void collect(const QuadraticSet& qs, Condition cond, ConditionReport& rep,
             const std::string& prefix) {
  const Elem n = static_cast<Elem>(qs.size());
  auto record = [&](std::vector<Elem> args, LocalValue v) {
    rep.fail({args, v.lhs, v.rhs,
              prefix + to_string(cond) + format_elems(qs, args) + ": " + format_elems(qs, v.lhs) +
                  " != " + format_elems(qs, v.rhs)});
  };
  if (arity(cond) == 2) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        auto v = evaluate_local(qs, cond, x, y);
        if (!v.holds()) record({x, y}, std::move(v));
      }
    return;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        auto v = evaluate_local(qs, cond, x, y, z);
        if (!v.holds()) record({x, y, z}, std::move(v));
      }
}

}  // namespace

ConditionReport check_condition(const QuadraticSet& qs, Condition cond, std::size_t cap) {
  ConditionReport rep(to_string(cond), cap);
  if (cond == Condition::weak_cyclic) {
    collect(qs, Condition::cl1, rep, "");
    collect(qs, Condition::cr1, rep, "");
  } else if (cond == Condition::cyclic) {
    for (Condition c : {Condition::cl1, Condition::cl2, Condition::cr1, Condition::cr2})
      collect(qs, c, rep, "");
  } else {
    collect(qs, cond, rep, "");
  }
  return rep;
}

bool holds(const QuadraticSet& qs, Condition cond) {
  return check_condition(qs, cond, 1).holds;
}

Profile classify(const QuadraticSet& qs, std::size_t cap) {
  Profile out;
  const bool bij = holds(qs, Predicate::bijective);
  for (Predicate p : all_predicates) {
    bool needs_bijective = p == Predicate::left_2cancellative ||
                           p == Predicate::right_2cancellative ||
                           p == Predicate::two_cancellative;
    if (needs_bijective && !bij)
      out.emplace_back(to_string(p), ConditionReport::skip(to_string(p), "not bijective"));
    else
      out.emplace_back(to_string(p), predicate(qs, p, cap));
  }
  for (Condition c : all_conditions) out.emplace_back(to_string(c), check_condition(qs, c, cap));
  return out;
}

const ConditionReport* find_in_profile(const Profile& p, std::string_view name) {
  for (const auto& [k, v] : p)
    if (k == name) return &v;
  return nullptr;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::lemma_ybe: return "lemma_ybe";
    case Suite::l2_decomposition: return "l2_decomposition";
    case Suite::quantum_binomial: return "quantum_binomial";
    case Suite::lri_two_of_three: return "lri_two_of_three";
    case Suite::cyclic_equivalence_under_lri: return "cyclic_equivalence_under_lri";
    case Suite::squarefree_implications: return "squarefree_implications";
    case Suite::csl_symmetric: return "csl_symmetric";
    case Suite::csl_l1_identities: return "csl_l1_identities";
    case Suite::cancellative_lemma: return "cancellative_lemma";
  }
  return "?";
}

std::optional<Suite> suite_from_string(std::string_view s) {
  for (Suite x : all_suites)
    if (s == to_string(x)) return x;
  return std::nullopt;
}

namespace {

bool implies(bool a, bool b) { return !a || b; }

bool lri_left_half(const QuadraticSet& q) {
  const Elem n = static_cast<Elem>(q.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (q.right(q.left(x, y), x) != y) return false;
  return true;
}

bool lri_right_half(const QuadraticSet& q) {
  const Elem n = static_cast<Elem>(q.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (q.left(x, q.right(y, x)) != y) return false;
  return true;
}

// (^x z)^y = ^{x^y}(z^{y^x}) and ^x(z^y) = (^{^y x} z)^{^x y}
std::pair<bool, bool> csl_identities(const QuadraticSet& q) {
  const Elem n = static_cast<Elem>(q.size());
  bool first = true, second = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (q.right(q.left(x, z), y) != q.left(q.right(x, y), q.right(z, q.right(y, x))))
          first = false;
        if (q.left(x, q.right(z, y)) != q.right(q.left(q.left(y, x), z), q.left(x, y)))
          second = false;
      }
  return {first, second};
}

bool length3_cancellation(const QuadraticSet& q) {
  TruncatedMonoid tm(q, 3);
  return cancellation_test(tm, 3).holds;
}

}  // namespace

SuiteReport equivalence_suite(const QuadraticSet& qs, Suite suite) {
  SuiteReport rep;
  rep.suite = to_string(suite);
  auto has = [&](Condition c) { return holds(qs, c); };
  auto is = [&](Predicate p) { return holds(qs, p); };

  switch (suite) {
    case Suite::lemma_ybe: {
      rep.hypotheses = "none";
      bool l1 = has(Condition::l1), r1 = has(Condition::r1), lr3 = has(Condition::lr3);
      bool l2 = has(Condition::l2), r2 = has(Condition::r2), ybe = has(Condition::ybe);
      rep.fact("l1", l1);
      rep.fact("r1", r1);
      rep.fact("lr3", lr3);
      rep.fact("ybe", ybe);
      rep.clause("ybe <=> l1 & r1 & lr3", ybe == (l1 && r1 && lr3));
      rep.clause("ybe <=> l1 & r2", ybe == (l1 && r2));
      rep.clause("ybe <=> r1 & l2", ybe == (r1 && l2));
      break;
    }
    case Suite::l2_decomposition: {
      rep.hypotheses = "none";
      bool l1 = has(Condition::l1), r1 = has(Condition::r1), lr3 = has(Condition::lr3);
      bool l2 = has(Condition::l2), r2 = has(Condition::r2);
      rep.fact("l2", l2);
      rep.fact("r2", r2);
      rep.clause("l2 <=> l1 & lr3", l2 == (l1 && lr3));
      rep.clause("r2 <=> r1 & lr3", r2 == (r1 && lr3));
      break;
    }
    case Suite::quantum_binomial: {
      rep.hypotheses = "nondegenerate, involutive, square_free";
      rep.hypotheses_met = is(Predicate::nondegenerate) && is(Predicate::involutive) &&
                           is(Predicate::square_free);
      if (!rep.hypotheses_met) break;
      const Condition seven[] = {Condition::ybe, Condition::l1, Condition::l2, Condition::r1,
                                 Condition::r2,  Condition::lr3, Condition::csl};
      bool ybe = has(Condition::ybe);
      for (Condition c : seven) {
        bool v = has(c);
        rep.fact(to_string(c), v);
        if (c != Condition::ybe) rep.clause(std::string("ybe <=> ") + to_string(c), v == ybe);
      }
      bool cyclic = has(Condition::cyclic), lri = has(Condition::lri);
      rep.fact("cyclic", cyclic);
      rep.fact("lri", lri);
      rep.clause("ybe => cyclic & lri", implies(ybe, cyclic && lri));
      break;
    }
    case Suite::lri_two_of_three: {
      rep.hypotheses = "none";
      bool inv = is(Predicate::involutive);
      bool nd = is(Predicate::nondegenerate);
      bool cyc = has(Condition::cyclic);
      bool lri = has(Condition::lri);
      bool left = lri_left_half(qs), right = lri_right_half(qs);
      rep.fact("involutive", inv);
      rep.fact("nondegenerate & cyclic", nd && cyc);
      rep.fact("lri", lri);
      rep.clause("involutive & nondegenerate & cyclic => lri", implies(inv && nd && cyc, lri));
      rep.clause("involutive & lri => nondegenerate & cyclic", implies(inv && lri, nd && cyc));
      rep.clause("nondegenerate & cyclic & lri => involutive", implies(nd && cyc && lri, inv));
      rep.clause("lri <=> (^x y)^x = y", lri == left);
      rep.clause("lri <=> ^x(y^x) = y", lri == right);
      rep.clause("lri => nondegenerate", implies(lri, nd));
      break;
    }
    case Suite::cyclic_equivalence_under_lri: {
      rep.hypotheses = "lri";
      rep.hypotheses_met = has(Condition::lri);
      if (!rep.hypotheses_met) break;
      bool cl1 = has(Condition::cl1);
      for (Condition c : {Condition::cl2, Condition::cr1, Condition::cr2, Condition::cyclic})
        rep.clause(std::string("cl1 <=> ") + to_string(c), has(c) == cl1);
      rep.fact("cl1", cl1);
      rep.clause("l1 <=> r1", has(Condition::l1) == has(Condition::r1));
      rep.clause("l2 <=> r2", has(Condition::l2) == has(Condition::r2));
      break;
    }
    case Suite::squarefree_implications: {
      rep.hypotheses = "nondegenerate, square_free";
      rep.hypotheses_met = is(Predicate::nondegenerate) && is(Predicate::square_free);
      if (!rep.hypotheses_met) break;
      bool l1 = has(Condition::l1), r1 = has(Condition::r1), lr3 = has(Condition::lr3);
      bool csl = has(Condition::csl), csr = has(Condition::csr);
      bool cl1 = has(Condition::cl1), cr1 = has(Condition::cr1);
      bool cl2 = has(Condition::cl2), cr2 = has(Condition::cr2);
      rep.clause("l1 => cl1", implies(l1, cl1));
      rep.clause("r1 => cr1", implies(r1, cr1));
      rep.clause("lr3 => cl1 & cr1", implies(lr3, cl1 && cr1));
      rep.clause("csl => cl2", implies(csl, cl2));
      rep.clause("csr => cr2", implies(csr, cr2));
      bool any = l1 || r1 || lr3 || csl || csr;
      bool inv = is(Predicate::involutive), lri = has(Condition::lri);
      rep.fact("one of l1, r1, lr3, csl, csr", any);
      rep.clause("any => (involutive <=> lri)", implies(any, inv == lri));
      rep.clause("any & involutive => cyclic", implies(any && inv, has(Condition::cyclic)));
      break;
    }
    case Suite::csl_symmetric: {
      rep.hypotheses = "nondegenerate, involutive, square_free";
      rep.hypotheses_met = is(Predicate::nondegenerate) && is(Predicate::involutive) &&
                           is(Predicate::square_free);
      if (!rep.hypotheses_met) break;
      bool sym = has(Condition::ybe), csl = has(Condition::csl);
      rep.fact("symmetric", sym);
      rep.fact("csl", csl);
      rep.clause("symmetric <=> csl", sym == csl);
      rep.clause("csl => cyclic & lri",
                 implies(csl, has(Condition::cyclic) && has(Condition::lri)));
      break;
    }
    case Suite::csl_l1_identities: {
      rep.hypotheses = "involutive, lri";
      rep.hypotheses_met = is(Predicate::involutive) && has(Condition::lri);
      if (!rep.hypotheses_met) break;
      bool csl = has(Condition::csl), l1 = has(Condition::l1);
      auto [id1, id2] = csl_identities(qs);
      rep.fact("csl", csl);
      rep.clause("nondegenerate & cyclic", is(Predicate::nondegenerate) && has(Condition::cyclic));
      rep.clause("csl <=> l1", csl == l1);
      rep.clause("csl => (^x z)^y = ^{x^y}(z^{y^x})", implies(csl, id1));
      rep.clause("csl => ^x(z^y) = (^{^y x} z)^{^x y}", implies(csl, id2));
      if (is(Predicate::two_cancellative) && length3_cancellation(qs)) {
        rep.fact("2cancellative & length-3 cancellation", true);
        rep.clause("csl <=> symmetric", csl == has(Condition::ybe));
      }
      break;
    }
    case Suite::cancellative_lemma: {
      rep.hypotheses = "2cancellative, length-3 cancellation in S";
      rep.hypotheses_met = is(Predicate::bijective) && is(Predicate::two_cancellative) &&
                           length3_cancellation(qs);
      if (!rep.hypotheses_met) break;
      bool l1 = has(Condition::l1), r1 = has(Condition::r1);
      bool l2 = has(Condition::l2), r2 = has(Condition::r2), ybe = has(Condition::ybe);
      rep.clause("l2 <=> r2", l2 == r2);
      rep.clause("r2 <=> l1 & r1", r2 == (l1 && r1));
      rep.clause("l1 & r1 <=> ybe", (l1 && r1) == ybe);
      if (is(Predicate::nondegenerate) && is(Predicate::involutive)) {
        rep.clause("l1 <=> r1", l1 == r1);
        rep.clause("r1 <=> symmetric", r1 == ybe);
      }
      break;
    }
  }
  return rep;
}

}  // namespace braidset
