#include "doctest.h"

#include "braidset/catalog.hpp"
#include "braidset/error.hpp"
#include "braidset/serialize.hpp"

using namespace braidset;

namespace {

const std::filesystem::path data_dir = BRAIDSET_DATA_DIR;

ErrorKind load_error(const std::string& doc) {
  try {
    load_solution(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document loaded: " << doc);
  return ErrorKind::axiom_violation;
}

}  // namespace

TEST_CASE("solutions round trip through json") {
  for (const auto& e : catalog()) {
    CAPTURE(e.key);
    auto text = solution_to_json(e.solution);
    auto back = load_solution(text);
    CHECK(back == e.solution);
    CHECK(back.name() == e.solution.name());
    CHECK(solution_to_json(back) == text);
  }
}

TEST_CASE("shipped data files match the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.key);
    auto q = load_solution_file(data_dir / (e.key + ".json"));
    CHECK(q == e.solution);
    CHECK(q.name() == e.key);
  }
}

TEST_CASE("catalog profiles match their goldens") {
  for (const auto& e : catalog()) {
    CAPTURE(e.key);
    CHECK(catalog_profile(e) == read_text_file(data_dir / "catalog" / (e.key + ".json")));
  }
}

TEST_CASE("catalog rejects unknown keys") {
  CHECK_THROWS_AS(catalog_entry("nope"), Error);
  CHECK(catalog_keys().size() == 11);
}

TEST_CASE("shorthand solution forms") {
  auto p = load_solution(R"js({"elements": ["x","y","z"], "permutational": {"f": "", "g": "(x y z)"}})js",
                         "rho");
  CHECK(p == catalog_entry("sec22_rho").solution);
  CHECK(p.name() == "rho");
  auto t = load_solution(R"js({"name": "t", "elements": ["a","b"], "trivial": true})js");
  CHECK(t == make_trivial({"a", "b"}));
  auto i = load_solution(R"js({"elements": ["a","b"], "identity": true})js");
  CHECK(i == make_identity({"a", "b"}));
}

TEST_CASE("malformed solution documents") {
  CHECK(load_error("{") == ErrorKind::malformed_document);
  CHECK(load_error("[]") == ErrorKind::malformed_document);
  CHECK(load_error(R"js({"elements": []})js") == ErrorKind::malformed_document);
  CHECK(load_error(R"js({"elements": ["a"], "r": [{"in": ["a","a"], "out": ["a","b"]}]})js") ==
        ErrorKind::unknown_label);
  CHECK(load_error(R"js({"elements": ["a","b"], "r": [{"in": ["a","a"], "out": ["a","a"]}]})js") ==
        ErrorKind::incomplete_table);
  CHECK(load_error(R"js({"elements": ["a"], "r": [{"in": ["a","a"], "out": ["a","a"]},
                                                {"in": ["a","a"], "out": ["a","a"]}]})js") ==
        ErrorKind::duplicate_entry);
  CHECK(load_error(R"js({"elements": ["a","a"], "trivial": true})js") == ErrorKind::duplicate_entry);
  CHECK_THROWS_AS(load_solution(R"js({"elements": ["a","b"], "permutational": {"f": "(a a)", "g": ""}})js"),
                  Error);
}

TEST_CASE("ground documents") {
  auto x = load_solution_file(data_dir / "sec5_X.json");
  auto y = load_solution_file(data_dir / "sec5_Y.json");
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    auto doc = load_ground_file(data_dir / ("sec5_ground_r" + std::to_string(k) + ".json"));
    CHECK(doc.x_part == x);
    CHECK(doc.y_part == y);
    auto e = build_extension(doc.x_part, doc.y_part, doc.ground);
    CHECK(e.assembled == sec5_extension(k).assembled);
    auto text = ground_to_json(e, "sec5_X.json", "sec5_Y.json");
    auto again = load_ground(text, data_dir);
    CHECK(again.ground.left == doc.ground.left);
    CHECK(again.ground.right == doc.ground.right);
  }
}

TEST_CASE("full ground list round trips without lri") {
  auto x = make_trivial({"a", "b"}, "X");
  auto y = make_identity({"c"}, "Y");
  GroundActions g = GroundActions::trivial(2, 1);
  auto e = build_extension(x, y, g);
  auto text = ground_to_json(e, "x.json", "y.json");
  auto doc = load_ground(text, ".", &x, &y);
  CHECK(doc.ground.left == g.left);
  CHECK(doc.ground.right == g.right);
}

TEST_CASE("bad ground documents") {
  auto x = make_trivial({"a", "b"});
  auto y = make_trivial({"c"});
  auto kind = [&](const std::string& doc) {
    try {
      load_ground(doc, ".", &x, &y);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::axiom_violation;
  };
  CHECK(kind("{}") == ErrorKind::malformed_document);
  CHECK(kind(R"js({"ground": [{"alpha": "c", "x": "a", "left": "a", "right": "c"}]})js") ==
        ErrorKind::incomplete_table);
  CHECK(kind(R"js({"ground": [{"alpha": "c", "x": "a", "left": "a", "right": "c"},
                            {"alpha": "c", "x": "a", "left": "b", "right": "c"}]})js") ==
        ErrorKind::duplicate_entry);
  CHECK(kind(R"js({"ground": [{"alpha": "q", "x": "a", "left": "a", "right": "c"},
                            {"alpha": "c", "x": "b", "left": "b", "right": "c"}]})js") ==
        ErrorKind::unknown_label);
  CHECK(kind(R"js({"L_alpha": {"c": "(a b)"}, "lri_completion": true})js") ==
        ErrorKind::malformed_document);
}

TEST_CASE("family document round trip") {
  auto x = sec5_x(), y = sec5_y();
  auto fam = sec5_family();
  auto text = family_to_json(fam, x, y);
  CHECK(text == read_text_file(data_dir / "sec5_family.json"));
  auto back = load_family(text, x, y);
  REQUIRE(back.slots.size() == fam.slots.size());
  for (std::size_t i = 0; i < fam.slots.size(); ++i)
    CHECK(back.slots[i].options.size() == fam.slots[i].options.size());
  for (int k = 1; k <= 3; ++k) {
    auto g1 = family_ground(x, y, fam, sec5_choice(k));
    auto g2 = family_ground(x, y, back, sec5_choice(k));
    CHECK(g1.left == g2.left);
    CHECK(g1.right == g2.right);
  }
}

TEST_CASE("report serialization") {
  auto q = catalog_entry("sec22_rho").solution;
  auto rep = predicate(q, Predicate::right_2cancellative);
  auto text = report_to_json(rep);
  CHECK(text.find("\"holds\": false") != std::string::npos);
  CHECK(text.find("r(x,x)=(y,x)") != std::string::npos);
}
