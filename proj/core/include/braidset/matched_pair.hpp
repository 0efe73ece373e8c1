#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidset/monoid.hpp"

namespace braidset {

// Free words up to a degree, compared in a truncated monoid.
class WordSpace {
 public:
  using element = Word;

  WordSpace(const TruncatedMonoid& tm, int N);

  element one() const { return {}; }
  element mul(const element& a, const element& b) const;
  bool equal(const element& a, const element& b) const { return tm_->equal(a, b); }
  element canonical(const element& a) const { return tm_->canonical(a); }
  int degree(const element& a) const { return static_cast<int>(a.size()); }
  const std::vector<element>& of_degree(int d) const { return by_degree_[d]; }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  std::string show(const element& a) const { return format_word(tm_->base(), a); }

 private:
  const TruncatedMonoid* tm_;
  std::vector<std::vector<element>> by_degree_;
};

// Normal forms (u, a) of a double cross product.
class ProductSpace {
 public:
  using element = DoubleProduct::Element;

  ProductSpace(const DoubleProduct& dp, int N);

  element one() const { return {}; }
  element mul(const element& a, const element& b) const { return dp_->mul(a, b); }
  bool equal(const element& a, const element& b) const { return dp_->equal(a, b); }
  element canonical(const element& a) const;
  int degree(const element& a) const { return static_cast<int>(a.first.size() + a.second.size()); }
  const std::vector<element>& of_degree(int d) const { return by_degree_[d]; }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  std::string show(const element& a) const;

 private:
  const DoubleProduct* dp_;
  std::vector<std::vector<element>> by_degree_;
};

namespace detail {

template <class Space>
std::string show_all(const Space& s, std::initializer_list<typename Space::element> xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + s.show(x);
  return out;
}

}  // namespace detail

// Matched-pair axioms for a left action of T on S (^a u in S) and a right
// action of S on T (a^u in T), on all elements of total degree <= N, plus
// independence of the chosen representatives.
template <class SSpace, class TSpace, class Left, class Right>
NamedReports check_pair_axioms(const SSpace& S, const TSpace& T, Left left, Right right, int N,
                               std::size_t cap = default_witness_cap) {
  ConditionReport ml0("ML0", cap), mr0("MR0", cap), ml1("ML1", cap), mr1("MR1", cap),
      ml2("ML2", cap), mr2("MR2", cap), wd("well_defined", cap);
  auto fail = [](ConditionReport& rep, std::string text) { rep.fail({{}, {}, {}, std::move(text)}); };

  for (int d = 0; d <= N; ++d)
    for (const auto& a : T.of_degree(d)) {
      if (!S.equal(left(a, S.one()), S.one())) fail(ml0, "^a 1 != 1 for a=" + T.show(a));
      if (!T.equal(right(a, S.one()), a)) fail(mr0, "a^1 != a for a=" + T.show(a));
    }
  for (int d = 0; d <= N; ++d)
    for (const auto& u : S.of_degree(d)) {
      if (!S.equal(left(T.one(), u), u)) fail(ml0, "^1 u != u for u=" + S.show(u));
      if (!T.equal(right(T.one(), u), T.one())) fail(mr0, "1^u != 1 for u=" + S.show(u));
    }

  for (int da = 0; da <= N; ++da)
    for (int du = 0; da + du <= N; ++du)
      for (const auto& a : T.of_degree(da))
        for (const auto& u : S.of_degree(du)) {
          auto ca = T.canonical(a);
          auto cu = S.canonical(u);
          if (!S.equal(left(a, u), left(ca, cu)) || !T.equal(right(a, u), right(ca, cu)))
            fail(wd, "representatives disagree at " + detail::show_all(T, {a}) + " ; " +
                         detail::show_all(S, {u}));
        }

  for (int da = 0; da <= N; ++da)
    for (int db = 0; da + db <= N; ++db)
      for (int du = 0; da + db + du <= N; ++du)
        for (const auto& a : T.of_degree(da))
          for (const auto& b : T.of_degree(db))
            for (const auto& u : S.of_degree(du)) {
              if (!S.equal(left(T.mul(a, b), u), left(a, left(b, u))))
                fail(ml1, "a=" + T.show(a) + " b=" + T.show(b) + " u=" + S.show(u));
              auto lhs = right(T.mul(a, b), u);
              auto rhs = T.mul(right(a, left(b, u)), right(b, u));
              if (!T.equal(lhs, rhs))
                fail(mr2, "a=" + T.show(a) + " b=" + T.show(b) + " u=" + S.show(u) + ": " +
                              T.show(lhs) + " != " + T.show(rhs));
            }

  for (int da = 0; da <= N; ++da)
    for (int du = 0; da + du <= N; ++du)
      for (int dv = 0; da + du + dv <= N; ++dv)
        for (const auto& a : T.of_degree(da))
          for (const auto& u : S.of_degree(du))
            for (const auto& v : S.of_degree(dv)) {
              if (!T.equal(right(a, S.mul(u, v)), right(right(a, u), v)))
                fail(mr1, "a=" + T.show(a) + " u=" + S.show(u) + " v=" + S.show(v));
              auto lhs = left(a, S.mul(u, v));
              auto rhs = S.mul(left(a, u), left(right(a, u), v));
              if (!S.equal(lhs, rhs))
                fail(ml2, "a=" + T.show(a) + " u=" + S.show(u) + " v=" + S.show(v) + ": " +
                              S.show(lhs) + " != " + S.show(rhs));
            }

  NamedReports out;
  for (auto* r : {&ml0, &mr0, &ml1, &mr1, &ml2, &mr2, &wd}) out.add(std::move(*r));
  return out;
}

}  // namespace braidset
