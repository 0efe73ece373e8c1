#include "doctest.h"

#include <random>

#include "braidset/catalog.hpp"
#include "braidset/conditions.hpp"
#include "oracles.hpp"

using namespace braidset;

namespace {

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool clause(const SuiteReport& s, std::string_view name) {
  for (const auto& c : s.clauses)
    if (c.name == name) return c.holds;
  FAIL("missing clause " << name);
  return false;
}

}  // namespace

TEST_CASE("condition names round trip") {
  for (Condition c : all_conditions) CHECK(condition_from_string(to_string(c)) == c);
  for (Predicate p : all_predicates) CHECK(predicate_from_string(to_string(p)) == p);
  for (Suite s : all_suites) CHECK(suite_from_string(to_string(s)) == s);
  CHECK_FALSE(condition_from_string("nope").has_value());
}

TEST_CASE("ybe agrees with the brute-force triple check") {
  std::mt19937 rng(7);
  int braided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto q = oracle::random_table(2 + trial % 2, rng, true);
    bool expect = oracle::ybe(q);
    braided += expect;
    CHECK(holds(q, Condition::ybe) == expect);
  }
  for (const auto& e : catalog()) {
    if (e.solution.size() > 12) continue;
    CAPTURE(e.key);
    CHECK(holds(e.solution, Condition::ybe) == oracle::ybe(e.solution));
  }
  CHECK(braided > 0);
}

TEST_CASE("ybe equals l1 and r1 and lr3 on every bijective 2-element table") {
  oracle::for_each_bijective_table(2, [](const QuadraticSet& q) {
    bool parts = holds(q, Condition::l1) && holds(q, Condition::r1) && holds(q, Condition::lr3);
    CHECK(holds(q, Condition::ybe) == parts);
    CHECK(equivalence_suite(q, Suite::lemma_ybe).ok());
    CHECK(equivalence_suite(q, Suite::l2_decomposition).ok());
  });
}

TEST_CASE("l1 and r1 without ybe") {
  auto q = catalog_entry("sec22_l1r1").solution;
  CHECK(holds(q, Condition::l1));
  CHECK(holds(q, Condition::r1));
  auto ybe = check_condition(q, Condition::ybe);
  REQUIRE_FALSE(ybe.holds);
  CHECK(ybe.witnesses.front().args.size() == 3);
  CHECK_FALSE(holds(q, Condition::lr3));
  auto s = equivalence_suite(q, Suite::lemma_ybe);
  CHECK(s.ok());
  // xy and xz are identified, so the set is not 2-cancellative
  auto c = predicate(q, Predicate::left_2cancellative);
  CHECK_FALSE(c.holds);
  CHECK(q.apply(q.index("x"), q.index("y")) == Pair{q.index("x"), q.index("z")});
}

TEST_CASE("permutational sets: braided iff f and g commute") {
  std::vector<std::string> labels{"a", "b", "c"};
  int count = 0, braided = 0, symmetric = 0;
  for (const Perm& f : all_perms(3))
    for (const Perm& g : all_perms(3)) {
      auto q = make_permutational(labels, f, g);
      bool commute = compose(f, g) == compose(g, f);
      bool ybe = holds(q, Condition::ybe);
      CHECK(ybe == commute);
      CHECK(ybe == oracle::ybe(q));
      bool sym = ybe && holds(q, Predicate::involutive);
      CHECK(sym == (ybe && f == inverse(g)));
      ++count;
      braided += ybe;
      symmetric += sym;
    }
  CHECK(count == 36);
  // commuting pairs in S3: 6 conjugacy-class sizes summed = 18
  CHECK(braided == 18);
  CHECK(symmetric == 6);
}

TEST_CASE("quantum binomial sets on three elements satisfy all equivalences") {
  int qb = 0;
  oracle::for_each_bijective_table(3, [&](const QuadraticSet& q) {
    if (!oracle::square_free(q) || !oracle::involutive(q) || !oracle::left_nondegenerate(q) ||
        !oracle::right_nondegenerate(q))
      return;
    ++qb;
    auto s = equivalence_suite(q, Suite::quantum_binomial);
    REQUIRE(s.hypotheses_met);
    CHECK(s.ok());
    bool y = oracle::ybe(q);
    for (Condition c : {Condition::l1, Condition::l2, Condition::r1, Condition::r2,
                        Condition::lr3, Condition::csl})
      CHECK(holds(q, c) == y);
    if (y) {
      CHECK(holds(q, Condition::cyclic));
      CHECK(holds(q, Condition::lri));
    }
  });
  CHECK(qb > 0);
}

TEST_CASE("every suite passes on the catalog") {
  for (const auto& e : catalog()) {
    if (e.solution.size() > 12) continue;
    for (Suite s : all_suites) {
      CAPTURE(e.key);
      CAPTURE(to_string(s));
      CHECK(equivalence_suite(e.solution, s).ok());
    }
  }
}

TEST_CASE("the twelve-element set satisfies every condition") {
  auto q = sec5_x();
  for (auto& [name, rep] : classify(q)) {
    CAPTURE(name);
    CHECK(rep.holds);
  }
}

TEST_CASE("witnesses are capped and counted") {
  auto q = make_identity({"a", "b", "c"});
  auto r = check_condition(q, Condition::lri, 2);
  CHECK_FALSE(r.holds);
  CHECK(r.witnesses.size() <= 2);
  CHECK(r.violations >= r.witnesses.size());
  auto lv = evaluate_local(q, Condition::l1, 0, 1, 2);
  CHECK(lv.holds() == check_local(q, Condition::l1, 0, 1, 2));
}

TEST_CASE("lri two of three and cyclic equivalence on square-free symmetric sets") {
  for (const char* key : {"perm_sym3", "trivial_ab", "sec5_Y"}) {
    auto q = catalog_entry(key).solution;
    auto two = equivalence_suite(q, Suite::lri_two_of_three);
    CHECK(two.ok());
    auto cyc = equivalence_suite(q, Suite::cyclic_equivalence_under_lri);
    CHECK(cyc.ok());
    auto csl = equivalence_suite(q, Suite::csl_symmetric);
    if (csl.hypotheses_met) CHECK(clause(csl, "symmetric <=> csl"));
  }
}
