#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidset/qset.hpp"
#include "braidset/report.hpp"

namespace braidset {

enum class Condition {
  l1, r1, lr3, l2, r2,
  cl1, cl2, cr1, cr2,
  lri, csl, csr,
  weak_cyclic, cyclic, ybe,
};

inline constexpr Condition all_conditions[] = {
    Condition::l1,  Condition::r1,  Condition::lr3, Condition::l2,  Condition::r2,
    Condition::cl1, Condition::cl2, Condition::cr1, Condition::cr2, Condition::lri,
    Condition::csl, Condition::csr, Condition::weak_cyclic, Condition::cyclic, Condition::ybe,
};

const char* to_string(Condition c);
std::optional<Condition> condition_from_string(std::string_view s);

// Number of elements a single instance of the condition quantifies over.
int arity(Condition c);

struct LocalValue {
  std::vector<Elem> lhs;
  std::vector<Elem> rhs;
  bool holds() const { return lhs == rhs; }
};

// Evaluates one instance. Pair conditions read (a, b) and ignore c.
LocalValue evaluate_local(const QuadraticSet& qs, Condition cond, Elem a, Elem b, Elem c = 0);

// Only for l1, r1, lr3, l2, r2 and ybe.
bool check_local(const QuadraticSet& qs, Condition cond, Elem a, Elem b, Elem c);

ConditionReport check_condition(const QuadraticSet& qs, Condition cond,
                                std::size_t cap = default_witness_cap);
bool holds(const QuadraticSet& qs, Condition cond);

// Every predicate followed by every condition, in declaration order.
using Profile = std::vector<std::pair<std::string, ConditionReport>>;
Profile classify(const QuadraticSet& qs, std::size_t cap = default_witness_cap);
const ConditionReport* find_in_profile(const Profile& p, std::string_view name);

enum class Suite {
  lemma_ybe,
  l2_decomposition,
  quantum_binomial,
  lri_two_of_three,
  cyclic_equivalence_under_lri,
  squarefree_implications,
  csl_symmetric,
  csl_l1_identities,
  cancellative_lemma,
};

inline constexpr Suite all_suites[] = {
    Suite::lemma_ybe,         Suite::l2_decomposition,
    Suite::quantum_binomial,  Suite::lri_two_of_three,
    Suite::cyclic_equivalence_under_lri, Suite::squarefree_implications,
    Suite::csl_symmetric,     Suite::csl_l1_identities,
    Suite::cancellative_lemma,
};

const char* to_string(Suite s);
std::optional<Suite> suite_from_string(std::string_view s);

SuiteReport equivalence_suite(const QuadraticSet& qs, Suite suite);

}  // namespace braidset
