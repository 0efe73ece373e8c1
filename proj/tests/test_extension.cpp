#include "doctest.h"

#include <set>

#include "braidset/catalog.hpp"
#include "braidset/error.hpp"
#include "braidset/extension.hpp"
#include "oracles.hpp"

using namespace braidset;

namespace {

bool mixed_bz(const ExtensionSet& e) {
  return holds(e, MixedCondition::ml1) && holds(e, MixedCondition::mr1) &&
         holds(e, MixedCondition::ml2) && holds(e, MixedCondition::mr2);
}

// Every bijection Y x X -> X x Y read as (^alpha x, alpha^x), in code order.
template <class F>
void for_each_ground(std::size_t nx, std::size_t ny, F f) {
  std::vector<Elem> codes(nx * ny);
  std::iota(codes.begin(), codes.end(), 0);
  do {
    GroundActions g;
    g.nx = nx;
    g.ny = ny;
    for (Elem c : codes) {
      g.left.push_back(static_cast<Elem>(c / ny));
      g.right.push_back(static_cast<Elem>(c % ny));
    }
    f(g);
  } while (std::next_permutation(codes.begin(), codes.end()));
}

}  // namespace

TEST_CASE("trivial ground actions give the trivial solution") {
  auto x = make_trivial({"a", "b"});
  auto y = make_trivial({"c"});
  auto e = build_extension(x, y, GroundActions::trivial(2, 1));
  CHECK(e.assembled == make_trivial({"a", "b", "c"}).renamed("Z"));
  for (MixedCondition m : all_mixed_conditions) {
    auto r = check_mixed(e, m);
    CAPTURE(to_string(m));
    CHECK((r.holds || !r.evaluated()));
  }
  CHECK(extension_invariants(e).all_hold());
}

TEST_CASE("build_extension rejects bad input") {
  auto x = make_trivial({"a", "b"});
  CHECK_THROWS_AS(build_extension(x, make_trivial({"a"}), GroundActions::trivial(2, 1)), Error);
  GroundActions g = GroundActions::trivial(2, 1);
  g.left = {0, 0};
  try {
    build_extension(x, make_trivial({"c"}), g);
    FAIL("expected not_regular");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::not_regular);
  }
  g.left = {0};
  CHECK_THROWS_AS(build_extension(x, make_trivial({"c"}), g), Error);
}

TEST_CASE("mixed ybe conditions match direct ybe on all extensions of two by two") {
  auto x = make_trivial({"a", "b"});
  auto y = make_trivial({"c", "d"});
  int total = 0, braided = 0;
  for_each_ground(2, 2, [&](const GroundActions& g) {
    auto e = build_extension(x, y, g);
    bool direct = oracle::ybe(e.assembled);
    CHECK(direct == mixed_bz(e));
    CHECK(verify_extension_theorem(e, ExtensionSuite::BZ).ok());
    ++total;
    braided += direct;
  });
  CHECK(total == 24);
  CHECK(braided > 0);
}

TEST_CASE("full-table enumeration visits every regular extension") {
  auto x = make_trivial({"a", "b"});
  auto y = make_trivial({"c", "d"});
  EnumerationOptions opt;
  std::set<std::vector<Pair>> seen;
  auto s = enumerate_extensions(x, y, opt, [&](const ExtensionSet& e) {
    seen.insert(e.assembled.table());
    return true;
  });
  CHECK(s.visited == 24);
  CHECK(s.regular == 24);
  CHECK(seen.size() == 24);

  opt.filters = {ExtensionFilter::ybe};
  std::size_t ybe = 0;
  for_each_ground(2, 2, [&](const GroundActions& g) {
    ybe += oracle::ybe(build_extension(x, y, g).assembled);
  });
  auto f = enumerate_extensions(x, y, opt, [](const ExtensionSet&) { return true; });
  CHECK(f.emitted == ybe);

  opt.filters.clear();
  opt.limit = 5;
  auto l = enumerate_extensions(x, y, opt, [](const ExtensionSet&) { return true; });
  CHECK(l.emitted == 5);
  CHECK(l.truncated);

  opt.limit = 0;
  opt.table_budget = 3;
  CHECK_THROWS_AS(enumerate_extensions(x, y, opt, [](const ExtensionSet&) { return true; }),
                  Error);
}

TEST_CASE("three-orbit extensions") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    auto e = sec5_extension(k);
    const auto& z = e.assembled;
    CHECK(z.size() == 18);
    CHECK(oracle::ybe(z));
    CHECK(oracle::involutive(z));
    CHECK(oracle::square_free(z));
    CHECK(holds(z, Condition::lri));
    CHECK(mixed_bz(e));
    CHECK(verify_extension_theorem(e, ExtensionSuite::BZ).ok());
    CHECK(verify_extension_theorem(e, ExtensionSuite::theoremD_squarefree).ok());
    CHECK(extension_invariants(e).all_hold());
  }
}

TEST_CASE("first extension fails stu at alpha1 z1 x1") {
  auto e = sec5_extension(1);
  auto r = check_mixed(e, MixedCondition::stu);
  REQUIRE_FALSE(r.holds);
  CHECK(r.witnesses.front().text == "stu(alpha1,z1,x1): (z4) != (z2)");
  auto& z = e.assembled;
  Word w = act_left(z, {z.index("alpha1")}, {z.index("x1"), z.index("z1")});
  CHECK(format_word(z, w) == "y1.z4");
}

TEST_CASE("third extension is a strong twisted union") {
  auto e = sec5_extension(3);
  CHECK(holds(e, MixedCondition::stu));
  CHECK(holds(e, MixedCondition::csla));
  CHECK(holds(e, MixedCondition::csra));
  auto st = strong_twisted_union_report(e);
  CHECK(st.stu);
  CHECK(st.ybe);
}

TEST_CASE("ground word actions restrict the table") {
  auto e = sec5_extension(2);
  auto g = ground_word_actions(e);
  auto a = accompanying_word_actions(e);
  for (Elem al = 0; al < e.ny(); ++al)
    for (Elem x = 0; x < e.nx(); ++x) {
      CHECK(g.left({al}, {x}) == Word{e.ground.act_left(al, x)});
      CHECK(g.right({al}, {x}) == Word{e.ground.act_right(al, x)});
      Pair p = e.assembled.apply(x, e.from_y(al));
      CHECK(a.left({x}, {al}) == Word{p.first - static_cast<Elem>(e.nx())});
      CHECK(a.right({x}, {al}) == Word{p.second});
    }
}

TEST_CASE("double of a braided set") {
  for (const char* key : {"sec22_rho", "perm_sym3", "trivial_ab", "sec5_Y"}) {
    CAPTURE(key);
    auto q = catalog_entry(key).solution;
    auto d = double_braided_set(q);
    CHECK(d.assembled.size() == 2 * q.size());
    CHECK(d.y_part.label(0) == q.label(0) + "'");
    CHECK(oracle::ybe(d.assembled));
  }
  try {
    double_braided_set(catalog_entry("sec22_l1r1").solution);
    FAIL("expected prerequisite_failed");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::prerequisite_failed);
  }
}

TEST_CASE("monoid extension of a double") {
  for (const char* key : {"trivial_ab", "perm_sym3"}) {
    CAPTURE(key);
    auto d = double_braided_set(catalog_entry(key).solution);
    TruncatedMonoid S(d.x_part, 2), T(d.y_part, 2), Z(d.assembled, 4);
    auto rep = m3_extension_check(S, T, ground_word_actions(d), 2, &Z);
    for (const auto& r : rep.items) {
      CAPTURE(r.condition);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("monoid extension check rejects corrupted actions") {
  auto d = double_braided_set(make_trivial({"a", "b"}));
  TruncatedMonoid S(d.x_part, 2), T(d.y_part, 2);
  WordActions bad = ground_word_actions(d);
  bad.left = [](const Word&, const Word& u) { return Word(u.size(), 0); };
  CHECK_FALSE(m3_extension_check(S, T, bad, 2).all_hold());
}

TEST_CASE("trivial parts: ybe iff strong twisted union") {
  auto x = make_trivial({"a", "b"});
  auto y = make_trivial({"c"});
  for_each_ground(2, 1, [&](const GroundActions& g) {
    auto e = build_extension(x, y, g);
    auto st = strong_twisted_union_report(e);
    CHECK(st.strong_twisted_union == oracle::ybe(e.assembled));
    CHECK(verify_extension_theorem(e, ExtensionSuite::trivial_parts).ok());
  });
}

TEST_CASE("monoid-level suites on a small extension") {
  auto d = double_braided_set(catalog_entry("perm_sym3").solution);
  CHECK(verify_extension_theorem(d, ExtensionSuite::matched_pair_ST, 2).ok());
  CHECK(verify_extension_theorem(d, ExtensionSuite::factorization_bellaT2, 2).ok());
  CHECK(verify_extension_theorem(d, ExtensionSuite::B_cancellative).ok());
}

TEST_CASE("mixed and filter names round trip") {
  for (MixedCondition m : all_mixed_conditions) CHECK(mixed_condition_from_string(to_string(m)) == m);
  for (ExtensionSuite s : all_extension_suites) CHECK(extension_suite_from_string(to_string(s)) == s);
  for (ExtensionFilter f : {ExtensionFilter::ybe, ExtensionFilter::square_free,
                            ExtensionFilter::involutive, ExtensionFilter::lri, ExtensionFilter::stu})
    CHECK(extension_filter_from_string(to_string(f)) == f);
}

TEST_CASE("automorphism actions in the three-orbit extensions") {
  auto r1 = automorphism_action_check(sec5_extension(1));
  auto r3 = automorphism_action_check(sec5_extension(3));
  CHECK_FALSE(r1.all_y_on_x());
  CHECK(r1.all_x_on_y());
  CHECK(r3.all_y_on_x());
  CHECK(r3.all_x_on_y());
  CHECK(r3.y_diagonal_on_x);
  CHECK_FALSE(r1.y_diagonal_on_x);
}
