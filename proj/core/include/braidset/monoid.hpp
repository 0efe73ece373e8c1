#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidset/qset.hpp"
#include "braidset/report.hpp"

namespace braidset {

using Word = std::vector<Elem>;

inline constexpr std::size_t default_state_budget = 20'000'000;

struct CongruenceClass {
  int degree = 0;
  std::vector<Word> members;  // lexicographic order
  Word canonical;             // members.front()
};

// S(X, r) cut off at a maximal word length. Relations preserve length, so the
// classes of degree n are the connected components of X^n under the
// replacements r_i and their inverses.
class TruncatedMonoid {
 public:
  TruncatedMonoid(QuadraticSet base, int max_degree,
                  std::size_t state_budget = default_state_budget);

  const QuadraticSet& base() const { return base_; }
  int max_degree() const { return max_degree_; }
  bool braided() const { return braided_; }

  std::uint64_t code(const Word& w) const;
  Word decode(std::uint64_t code, int degree) const;

  Word canonical(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;
  std::size_t class_count(int n) const;
  std::vector<CongruenceClass> classes_at_degree(int n) const;

  // Every word of length n, in lexicographic order.
  std::vector<Word> words(int n) const;

 private:
  void check_degree(std::size_t n) const;

  QuadraticSet base_;
  int max_degree_;
  bool braided_;
  std::vector<std::vector<std::uint32_t>> canon_;  // per degree: word code -> canonical code
};

bool word_equal(const TruncatedMonoid& tm, const Word& u, const Word& v);
std::vector<CongruenceClass> classes_at_degree(const TruncatedMonoid& tm, int n);

Word parse_word(const QuadraticSet& qs, std::string_view text);
std::string format_word(const QuadraticSet& qs, const Word& w);

// Letterwise extension of the table actions to words of the free monoid:
// ^x(y.a) = (^x y)(^{x^y} a), (b.z)^x = (b^{^z x})(z^x).
Word act_left(const QuadraticSet& q, const Word& a, const Word& u);
Word act_right(const QuadraticSet& q, const Word& a, const Word& u);

Word ext_left_action(const TruncatedMonoid& tm, const Word& a, const Word& u);
Word ext_right_action(const TruncatedMonoid& tm, const Word& a, const Word& u);
std::pair<Word, Word> r_S_apply(const TruncatedMonoid& tm, const Word& u, const Word& v);

// length 2: xy = xz => y = z and xz = yz => x = y.
// length 3: xu = xv => u = v and ux = vx => u = v for |u| = |v| = 2.
ConditionReport cancellation_test(const TruncatedMonoid& tm, int length);

// Left and right cancellation au = av => u = v, ua = va => u = v for all
// degrees up to the truncation. Used to probe cancellativity of S.
ConditionReport cancellation_search(const TruncatedMonoid& tm);

struct NamedReports {
  std::vector<ConditionReport> items;

  bool all_hold() const;
  const ConditionReport* find(std::string_view name) const;
  void add(ConditionReport r) { items.push_back(std::move(r)); }
  void append(const NamedReports& other);
};

using MatchedPairReport = NamedReports;

ConditionReport verify_action_well_defined(const TruncatedMonoid& tm);

// ML0..MR2, M3 and LR3 on all words of total degree <= N. With
// `enforce_prerequisites` a non-braided base throws PrerequisiteFailed.
MatchedPairReport verify_matched_pair(const TruncatedMonoid& tm, int N,
                                      bool enforce_prerequisites = true);

enum class MonoidCheck { ybe, strong, nondegenerate, involutive };

const char* to_string(MonoidCheck c);

NamedReports verify_braided_monoid(const TruncatedMonoid& tm, int N,
                                   const std::vector<MonoidCheck>& checks,
                                   bool enforce_prerequisites = true);

// r_S(r_S(u, v)) = (u, v) classwise for total degree <= N.
ConditionReport r_S_involutive(const TruncatedMonoid& tm, int N);

// Actions of T-words on S-words: left gives ^a u (an S-word), right a^u (a T-word).
struct WordActions {
  std::function<Word(const Word&, const Word&)> left;
  std::function<Word(const Word&, const Word&)> right;
};

WordActions table_actions(const QuadraticSet& q);

// S x T with (u,a)(v,b) = (u . ^a v, a^v . b). Both factors must outlive it.
class DoubleProduct {
 public:
  using Element = std::pair<Word, Word>;

  DoubleProduct(const TruncatedMonoid& S, const TruncatedMonoid& T, WordActions actions, int N);

  const TruncatedMonoid& left_factor() const { return *S_; }
  const TruncatedMonoid& right_factor() const { return *T_; }
  const WordActions& actions() const { return actions_; }
  int max_degree() const { return N_; }

  Element mul(const Element& x, const Element& y) const;
  bool equal(const Element& x, const Element& y) const;
  ConditionReport verify_associativity() const;

 private:
  const TruncatedMonoid* S_;
  const TruncatedMonoid* T_;
  WordActions actions_;
  int N_;
};

// Throws AxiomViolation when the actions fail ML0..MR2 up to degree N.
DoubleProduct double_cross_product(const TruncatedMonoid& S, const TruncatedMonoid& T,
                                   WordActions actions, int N);

NamedReports verify_triple_product(const TruncatedMonoid& tm, int N,
                                   bool enforce_prerequisites = true);

}  // namespace braidset
