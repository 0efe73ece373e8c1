#include "braidset/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "braidset/conditions.hpp"
#include "braidset/error.hpp"
#include "braidset/matched_pair.hpp"

namespace braidset {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

TruncatedMonoid::TruncatedMonoid(QuadraticSet base, int max_degree, std::size_t state_budget)
    : base_(std::move(base)), max_degree_(max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::degree_exceeded, "negative degree");
  braided_ = holds(base_, Condition::ybe);
  const std::uint64_t n = base_.size();
  std::uint64_t total = 1;
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0) total *= n;
    if (total > state_budget || total > 0xffffffffULL)
      throw Error(ErrorKind::budget_exceeded,
                  std::to_string(n) + "^" + std::to_string(d) + " words exceed the state budget of " +
                      std::to_string(state_budget));
  }

  canon_.resize(max_degree + 1);
  std::uint64_t size = 1;
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0) size *= n;
    std::vector<std::uint32_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0u);
    // Position i (0-based, from the left) has weight n^(d-1-i).
    std::vector<std::uint64_t> weight(d);
    for (int i = d - 1, w = 1; i >= 0; --i, w *= static_cast<int>(n)) weight[i] = w;
    for (std::uint64_t c = 0; c < size; ++c) {
      for (int i = 0; i + 1 < d; ++i) {
        Elem x = static_cast<Elem>((c / weight[i]) % n);
        Elem y = static_cast<Elem>((c / weight[i + 1]) % n);
        Pair p = base_.apply(x, y);
        std::uint64_t c2 = c - x * weight[i] - y * weight[i + 1] + p.first * weight[i] +
                           p.second * weight[i + 1];
        std::uint32_t ra = find_root(parent, static_cast<std::uint32_t>(c));
        std::uint32_t rb = find_root(parent, static_cast<std::uint32_t>(c2));
        if (ra == rb) continue;
        // The smaller code stays the root, so roots are lexicographic minima.
        if (ra < rb)
          parent[rb] = ra;
        else
          parent[ra] = rb;
      }
    }
    for (std::uint64_t c = 0; c < size; ++c)
      parent[c] = find_root(parent, static_cast<std::uint32_t>(c));
    canon_[d] = std::move(parent);
  }
}

void TruncatedMonoid::check_degree(std::size_t n) const {
  if (n > static_cast<std::size_t>(max_degree_))
    throw Error(ErrorKind::degree_exceeded, "degree " + std::to_string(n) + " exceeds truncation " +
                                                std::to_string(max_degree_));
}

std::uint64_t TruncatedMonoid::code(const Word& w) const {
  std::uint64_t c = 0;
  for (Elem x : w) c = c * base_.size() + x;
  return c;
}

Word TruncatedMonoid::decode(std::uint64_t code, int degree) const {
  Word w(degree);
  for (int i = degree - 1; i >= 0; --i) {
    w[i] = static_cast<Elem>(code % base_.size());
    code /= base_.size();
  }
  return w;
}

Word TruncatedMonoid::canonical(const Word& w) const {
  check_degree(w.size());
  return decode(canon_[w.size()][code(w)], static_cast<int>(w.size()));
}

bool TruncatedMonoid::equal(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return false;
  check_degree(u.size());
  return canon_[u.size()][code(u)] == canon_[v.size()][code(v)];
}

std::size_t TruncatedMonoid::class_count(int n) const {
  check_degree(n);
  std::size_t count = 0;
  for (std::size_t c = 0; c < canon_[n].size(); ++c)
    if (canon_[n][c] == c) ++count;
  return count;
}

std::vector<CongruenceClass> TruncatedMonoid::classes_at_degree(int n) const {
  check_degree(n);
  std::vector<CongruenceClass> out;
  std::vector<std::size_t> slot(canon_[n].size(), 0);
  for (std::size_t c = 0; c < canon_[n].size(); ++c) {
    if (canon_[n][c] == c) {
      slot[c] = out.size();
      out.push_back({n, {}, decode(c, n)});
    }
    out[slot[canon_[n][c]]].members.push_back(decode(c, n));
  }
  return out;
}

std::vector<Word> TruncatedMonoid::words(int n) const {
  check_degree(n);
  std::vector<Word> out;
  out.reserve(canon_[n].size());
  for (std::size_t c = 0; c < canon_[n].size(); ++c) out.push_back(decode(c, n));
  return out;
}

bool word_equal(const TruncatedMonoid& tm, const Word& u, const Word& v) { return tm.equal(u, v); }

std::vector<CongruenceClass> classes_at_degree(const TruncatedMonoid& tm, int n) {
  return tm.classes_at_degree(n);
}

Word parse_word(const QuadraticSet& qs, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '.' || text[i] == ',')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '.' && text[i] != ',') ++i;
    if (i > start) w.push_back(qs.index(text.substr(start, i - start)));
  }
  return w;
}

std::string format_word(const QuadraticSet& qs, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += qs.label(w[i]);
  }
  return s;
}

Word act_left(const QuadraticSet& q, const Word& a, const Word& u) {
  Word cur = u;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    Elem x = *it;
    for (Elem& y : cur) {
      Pair p = q.apply(x, y);
      y = p.first;
      x = p.second;
    }
  }
  return cur;
}

Word act_right(const QuadraticSet& q, const Word& a, const Word& u) {
  Word cur = a;
  for (Elem z : u) {
    Elem x = z;
    for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
      Pair p = q.apply(*it, x);
      *it = p.second;
      x = p.first;
    }
  }
  return cur;
}

namespace {

void require_braided(const TruncatedMonoid& tm) {
  if (!tm.braided()) throw Error(ErrorKind::prerequisite_failed, "ybe (base is not braided)");
}

void require_degree(const TruncatedMonoid& tm, std::size_t total) {
  if (total > static_cast<std::size_t>(tm.max_degree()))
    throw Error(ErrorKind::degree_exceeded, "total degree " + std::to_string(total) +
                                                " exceeds truncation " +
                                                std::to_string(tm.max_degree()));
}

}  // namespace

Word ext_left_action(const TruncatedMonoid& tm, const Word& a, const Word& u) {
  require_braided(tm);
  require_degree(tm, a.size() + u.size());
  return act_left(tm.base(), a, u);
}

Word ext_right_action(const TruncatedMonoid& tm, const Word& a, const Word& u) {
  require_braided(tm);
  require_degree(tm, a.size() + u.size());
  return act_right(tm.base(), a, u);
}

std::pair<Word, Word> r_S_apply(const TruncatedMonoid& tm, const Word& u, const Word& v) {
  return {ext_left_action(tm, u, v), ext_right_action(tm, u, v)};
}

ConditionReport cancellation_test(const TruncatedMonoid& tm, int length) {
  if (length != 2 && length != 3)
    throw Error(ErrorKind::malformed_document, "cancellation length must be 2 or 3");
  require_degree(tm, length);
  const auto& q = tm.base();
  ConditionReport rep("cancellation_length_" + std::to_string(length));
  const auto tails = tm.words(length - 1);
  for (Elem x = 0; x < q.size(); ++x)
    for (std::size_t i = 0; i < tails.size(); ++i)
      for (std::size_t j = i + 1; j < tails.size(); ++j) {
        const Word& u = tails[i];
        const Word& v = tails[j];
        if (tm.equal(u, v)) continue;
        Word xu = concat({x}, u), xv = concat({x}, v);
        if (tm.equal(xu, xv))
          rep.fail({{}, xu, xv, format_word(q, xu) + " = " + format_word(q, xv) + " (left)"});
        Word ux = concat(u, {x}), vx = concat(v, {x});
        if (tm.equal(ux, vx))
          rep.fail({{}, ux, vx, format_word(q, ux) + " = " + format_word(q, vx) + " (right)"});
      }
  return rep;
}

ConditionReport cancellation_search(const TruncatedMonoid& tm) {
  const auto& q = tm.base();
  ConditionReport rep("cancellation_search");
  for (int total = 2; total <= tm.max_degree(); ++total)
    for (int da = 1; da < total; ++da) {
      const auto as = tm.words(da);
      const auto us = tm.words(total - da);
      for (const auto& a : as)
        for (std::size_t i = 0; i < us.size(); ++i)
          for (std::size_t j = i + 1; j < us.size(); ++j) {
            if (tm.equal(us[i], us[j])) continue;
            Word l1 = concat(a, us[i]), l2 = concat(a, us[j]);
            if (tm.equal(l1, l2))
              rep.fail({{}, l1, l2, format_word(q, l1) + " = " + format_word(q, l2) + " (left)"});
            Word r1 = concat(us[i], a), r2 = concat(us[j], a);
            if (tm.equal(r1, r2))
              rep.fail({{}, r1, r2, format_word(q, r1) + " = " + format_word(q, r2) + " (right)"});
          }
    }
  return rep;
}

bool NamedReports::all_hold() const {
  for (const auto& r : items)
    if (r.evaluated() && !r.holds) return false;
  return true;
}

const ConditionReport* NamedReports::find(std::string_view name) const {
  for (const auto& r : items)
    if (r.condition == name) return &r;
  return nullptr;
}

void NamedReports::append(const NamedReports& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

WordSpace::WordSpace(const TruncatedMonoid& tm, int N) : tm_(&tm) {
  require_degree(tm, N);
  for (int d = 0; d <= N; ++d) by_degree_.push_back(tm.words(d));
}

WordSpace::element WordSpace::mul(const element& a, const element& b) const { return concat(a, b); }

ProductSpace::ProductSpace(const DoubleProduct& dp, int N) : dp_(&dp) {
  by_degree_.resize(N + 1);
  for (int d = 0; d <= N; ++d)
    for (int i = 0; i <= d; ++i) {
      auto us = dp.left_factor().words(i);
      auto as = dp.right_factor().words(d - i);
      for (const auto& u : us)
        for (const auto& a : as) by_degree_[d].emplace_back(u, a);
    }
}

ProductSpace::element ProductSpace::canonical(const element& a) const {
  return {dp_->left_factor().canonical(a.first), dp_->right_factor().canonical(a.second)};
}

std::string ProductSpace::show(const element& a) const {
  return "(" + format_word(dp_->left_factor().base(), a.first) + " | " +
         format_word(dp_->right_factor().base(), a.second) + ")";
}

ConditionReport verify_action_well_defined(const TruncatedMonoid& tm) {
  require_braided(tm);
  WordSpace S(tm, tm.max_degree());
  const auto& q = tm.base();
  auto rep = check_pair_axioms(
      S, S, [&](const Word& a, const Word& u) { return act_left(q, a, u); },
      [&](const Word& a, const Word& u) { return act_right(q, a, u); }, tm.max_degree());
  return *rep.find("well_defined");
}

MatchedPairReport verify_matched_pair(const TruncatedMonoid& tm, int N, bool enforce) {
  if (enforce) require_braided(tm);
  require_degree(tm, N);
  const auto& q = tm.base();
  WordSpace S(tm, N);
  auto L = [&](const Word& a, const Word& u) { return act_left(q, a, u); };
  auto R = [&](const Word& a, const Word& u) { return act_right(q, a, u); };
  MatchedPairReport out = check_pair_axioms(S, S, L, R, N);

  ConditionReport m3("M3"), lr3("LR3");
  for (int du = 0; du <= N; ++du)
    for (int dv = 0; du + dv <= N; ++dv)
      for (const auto& u : S.of_degree(du))
        for (const auto& v : S.of_degree(dv))
          if (!tm.equal(concat(L(u, v), R(u, v)), concat(u, v)))
            m3.fail({{}, {}, {}, "u=" + S.show(u) + " v=" + S.show(v)});

  for (int da = 0; da <= N; ++da)
    for (int dw = 0; da + dw <= N; ++dw)
      for (int db = 0; da + dw + db <= N; ++db)
        for (const auto& a : S.of_degree(da))
          for (const auto& w : S.of_degree(dw))
            for (const auto& b : S.of_degree(db)) {
              // (^a w)^{(^{a^w} b)} = ^{(a^{^w b})}(w^b)
              Word lhs = R(L(a, w), L(R(a, w), b));
              Word rhs = L(R(a, L(w, b)), R(w, b));
              if (!tm.equal(lhs, rhs))
                lr3.fail({{}, lhs, rhs,
                          "a=" + S.show(a) + " w=" + S.show(w) + " b=" + S.show(b) + ": " +
                              S.show(lhs) + " != " + S.show(rhs)});
            }
  out.add(std::move(m3));
  out.add(std::move(lr3));
  return out;
}

const char* to_string(MonoidCheck c) {
  switch (c) {
    case MonoidCheck::ybe: return "ybe";
    case MonoidCheck::strong: return "strong";
    case MonoidCheck::nondegenerate: return "nondegenerate";
    case MonoidCheck::involutive: return "involutive";
  }
  return "?";
}

ConditionReport r_S_involutive(const TruncatedMonoid& tm, int N) {
  require_degree(tm, N);
  const auto& q = tm.base();
  WordSpace S(tm, N);
  ConditionReport rep("involutive");
  for (int du = 0; du <= N; ++du)
    for (int dv = 0; du + dv <= N; ++dv)
      for (const auto& u : S.of_degree(du))
        for (const auto& v : S.of_degree(dv)) {
          Word a = act_left(q, u, v), b = act_right(q, u, v);
          if (!tm.equal(act_left(q, a, b), u) || !tm.equal(act_right(q, a, b), v))
            rep.fail({{}, {}, {}, "u=" + S.show(u) + " v=" + S.show(v)});
        }
  return rep;
}

namespace {

ConditionReport rs_ybe(const TruncatedMonoid& tm, const WordSpace& S, int N) {
  const auto& q = tm.base();
  ConditionReport rep("ybe");
  auto step = [&](std::vector<Word>& w, int i) {
    Word a = act_left(q, w[i], w[i + 1]);
    Word b = act_right(q, w[i], w[i + 1]);
    w[i] = std::move(a);
    w[i + 1] = std::move(b);
  };
  for (int du = 0; du <= N; ++du)
    for (int dv = 0; du + dv <= N; ++dv)
      for (int dw = 0; du + dv + dw <= N; ++dw)
        for (const auto& u : S.of_degree(du))
          for (const auto& v : S.of_degree(dv))
            for (const auto& w : S.of_degree(dw)) {
              std::vector<Word> a{u, v, w}, b{u, v, w};
              step(a, 0), step(a, 1), step(a, 0);
              step(b, 1), step(b, 0), step(b, 1);
              for (int i = 0; i < 3; ++i)
                if (!tm.equal(a[i], b[i])) {
                  rep.fail({{}, {}, {},
                            "u=" + S.show(u) + " v=" + S.show(v) + " w=" + S.show(w)});
                  break;
                }
            }
  return rep;
}

ConditionReport rs_strong(const TruncatedMonoid& tm, const WordSpace& S, int N) {
  const auto& q = tm.base();
  ConditionReport rep("strong");
  if (!holds(q, Predicate::bijective)) {
    rep.fail({{}, {}, {}, "r is not bijective"});
    return rep;
  }
  const QuadraticSet inv = inverse_solution(q);
  // u |> a and u <| a are the word actions of (X, r^{-1}).
  auto tri_r = [&](const Word& u, const Word& a) { return act_left(inv, u, a); };
  auto tri_l = [&](const Word& u, const Word& a) { return act_right(inv, u, a); };
  for (int da = 0; da <= N; ++da)
    for (int du = 0; da + du <= N; ++du)
      for (const auto& a : S.of_degree(da))
        for (const auto& u : S.of_degree(du)) {
          Word v = act_left(q, a, u), b = act_right(q, a, u);
          bool ok = tm.equal(tri_r(v, b), a) && tm.equal(tri_l(v, b), u);
          Word s = tri_r(u, a), t = tri_l(u, a);
          ok = ok && tm.equal(act_left(q, s, t), u) && tm.equal(act_right(q, s, t), a);
          if (!ok) rep.fail({{}, {}, {}, "a=" + S.show(a) + " u=" + S.show(u)});
        }
  return rep;
}

ConditionReport rs_nondegenerate(const TruncatedMonoid& tm, int N) {
  const auto& q = tm.base();
  ConditionReport rep("nondegenerate");
  for (int da = 0; da <= N; ++da) {
    auto actors = tm.classes_at_degree(da);
    for (int dn = 0; da + dn <= N; ++dn) {
      auto targets = tm.classes_at_degree(dn);
      for (const auto& a : actors) {
        std::vector<Word> lefts, rights;
        for (const auto& u : targets) {
          lefts.push_back(tm.canonical(act_left(q, a.canonical, u.canonical)));
          rights.push_back(tm.canonical(act_right(q, u.canonical, a.canonical)));
        }
        for (auto* images : {&lefts, &rights}) {
          std::sort(images->begin(), images->end());
          if (std::adjacent_find(images->begin(), images->end()) != images->end())
            rep.fail({{}, {}, {},
                      std::string(images == &lefts ? "left" : "right") + " action of " +
                          format_word(q, a.canonical) + " on degree " + std::to_string(dn) +
                          " is not injective"});
        }
      }
    }
  }
  return rep;
}

}  // namespace

NamedReports verify_braided_monoid(const TruncatedMonoid& tm, int N,
                                   const std::vector<MonoidCheck>& checks, bool enforce) {
  if (enforce) require_braided(tm);
  require_degree(tm, N);
  WordSpace S(tm, N);
  NamedReports out;
  for (MonoidCheck c : checks) {
    switch (c) {
      case MonoidCheck::ybe: out.add(rs_ybe(tm, S, N)); break;
      case MonoidCheck::strong: out.add(rs_strong(tm, S, N)); break;
      case MonoidCheck::nondegenerate: out.add(rs_nondegenerate(tm, N)); break;
      case MonoidCheck::involutive: {
        bool base_inv = holds(tm.base(), Predicate::involutive);
        ConditionReport rs = r_S_involutive(tm, N);
        ConditionReport transfer("involutive_transfer");
        if (rs.holds != base_inv)
          transfer.fail({{}, {}, {},
                         std::string("base involutive: ") + (base_inv ? "true" : "false") +
                             ", r_S involutive: " + (rs.holds ? "true" : "false")});
        if (base_inv)
          out.add(std::move(rs));
        else
          out.add(ConditionReport::skip("involutive", "base not involutive"));
        out.add(std::move(transfer));
        break;
      }
    }
  }
  return out;
}

WordActions table_actions(const QuadraticSet& q) {
  return {[q](const Word& a, const Word& u) { return act_left(q, a, u); },
          [q](const Word& a, const Word& u) { return act_right(q, a, u); }};
}

DoubleProduct::DoubleProduct(const TruncatedMonoid& S, const TruncatedMonoid& T,
                             WordActions actions, int N)
    : S_(&S), T_(&T), actions_(std::move(actions)), N_(N) {
  require_degree(S, N);
  require_degree(T, N);
}

DoubleProduct::Element DoubleProduct::mul(const Element& x, const Element& y) const {
  return {concat(x.first, actions_.left(x.second, y.first)),
          concat(actions_.right(x.second, y.first), y.second)};
}

bool DoubleProduct::equal(const Element& x, const Element& y) const {
  return S_->equal(x.first, y.first) && T_->equal(x.second, y.second);
}

ConditionReport DoubleProduct::verify_associativity() const {
  ProductSpace P(*this, N_);
  ConditionReport rep("associativity");
  for (int d1 = 0; d1 <= N_; ++d1)
    for (int d2 = 0; d1 + d2 <= N_; ++d2)
      for (int d3 = 0; d1 + d2 + d3 <= N_; ++d3)
        for (const auto& x : P.of_degree(d1))
          for (const auto& y : P.of_degree(d2))
            for (const auto& z : P.of_degree(d3))
              if (!equal(mul(mul(x, y), z), mul(x, mul(y, z))))
                rep.fail({{}, {}, {}, P.show(x) + " " + P.show(y) + " " + P.show(z)});
  return rep;
}

DoubleProduct double_cross_product(const TruncatedMonoid& S, const TruncatedMonoid& T,
                                   WordActions actions, int N) {
  WordSpace SS(S, N), TS(T, N);
  auto rep = check_pair_axioms(SS, TS, actions.left, actions.right, N);
  for (const auto& r : rep.items)
    if (!r.holds)
      throw Error(ErrorKind::axiom_violation,
                  r.condition + (r.witnesses.empty() ? "" : ": " + r.witnesses.front().text));
  return DoubleProduct(S, T, std::move(actions), N);
}

NamedReports verify_triple_product(const TruncatedMonoid& tm, int N, bool enforce) {
  if (enforce) require_braided(tm);
  require_degree(tm, N);
  const auto& q = tm.base();
  DoubleProduct dp(tm, tm, table_actions(q), N);
  WordSpace S(tm, N);
  ProductSpace P(dp, N);
  using PE = ProductSpace::element;

  // (S, S x S): the product acts on S from the left, S acts on the product from the right.
  auto left1 = [&](const PE& U, const Word& v) { return act_left(q, concat(U.first, U.second), v); };
  auto right1 = [&](const PE& U, const Word& v) {
    return PE{act_right(q, U.first, act_left(q, U.second, v)), act_right(q, U.second, v)};
  };
  // (S x S, S): S acts on the product from the left, the product acts on S from the right.
  auto left2 = [&](const Word& v, const PE& U) {
    return PE{act_left(q, v, U.first), act_left(q, act_right(q, v, U.first), U.second)};
  };
  auto right2 = [&](const Word& v, const PE& U) {
    return act_right(q, v, concat(U.first, U.second));
  };

  NamedReports out;
  for (auto r : check_pair_axioms(S, P, left1, right1, N).items) {
    r.condition = "(S,SxS) " + r.condition;
    out.add(std::move(r));
  }
  for (auto r : check_pair_axioms(P, S, left2, right2, N).items) {
    r.condition = "(SxS,S) " + r.condition;
    out.add(std::move(r));
  }

  // S x (S x S) and (S x S) x S on triples (v, u, a).
  using Triple = std::vector<Word>;
  auto prod_a = [&](const Triple& x, const Triple& y) {
    PE U{x[1], x[2]}, V{y[1], y[2]};
    Word s = concat(x[0], left1(U, y[0]));
    PE t = P.mul(right1(U, y[0]), V);
    return Triple{s, t.first, t.second};
  };
  auto prod_b = [&](const Triple& x, const Triple& y) {
    PE U{x[0], x[1]}, V{y[0], y[1]};
    PE s = P.mul(U, left2(x[2], V));
    Word t = concat(right2(x[2], V), y[2]);
    return Triple{s.first, s.second, t};
  };
  std::vector<std::vector<Triple>> triples(N + 1);
  for (int d = 0; d <= N; ++d)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        for (const auto& a : S.of_degree(i))
          for (const auto& b : S.of_degree(j))
            for (const auto& c : S.of_degree(d - i - j)) triples[d].push_back({a, b, c});
  ConditionReport agree("iterated_products_agree");
  for (int d1 = 0; d1 <= N; ++d1)
    for (int d2 = 0; d1 + d2 <= N; ++d2)
      for (const auto& x : triples[d1])
        for (const auto& y : triples[d2]) {
          Triple a = prod_a(x, y), b = prod_b(x, y);
          for (int i = 0; i < 3; ++i)
            if (!tm.equal(a[i], b[i])) {
              agree.fail({{}, {}, {}, S.show(x[0]) + "|" + S.show(x[1]) + "|" + S.show(x[2]) +
                                          " * " + S.show(y[0]) + "|" + S.show(y[1]) + "|" +
                                          S.show(y[2])});
              break;
            }
        }
  out.add(std::move(agree));
  return out;
}

}  // namespace braidset
