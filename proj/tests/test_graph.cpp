#include "doctest.h"

#include <random>

#include "braidset/catalog.hpp"
#include "braidset/error.hpp"
#include "braidset/graph.hpp"
#include "braidset/serialize.hpp"
#include "oracles.hpp"

using namespace braidset;

#ifndef BRAIDSET_DATA_DIR
#error "BRAIDSET_DATA_DIR must be defined"
#endif

namespace {

const std::filesystem::path data_dir = BRAIDSET_DATA_DIR;

Perm random_perm(std::size_t n, std::mt19937& rng) {
  Perm p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("gamma graph of a small set") {
  auto q = catalog_entry("sec22_rho").solution;
  auto g = gamma_graph(q);
  CHECK(g.vertices == q.labels());
  // ^z x = rho(x) for every z: three labels per vertex, none a self-loop
  CHECK(g.edges.size() == 9);
  CHECK(g.proper_edges().size() == 9);
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  auto dot = export_dot(g);
  CHECK(dot ==
        "digraph \"G\" {\n"
        "  \"x\";\n  \"y\";\n  \"z\";\n"
        "  \"x\" -> \"y\" [label=\"x,y,z\"];\n"
        "  \"y\" -> \"z\" [label=\"x,y,z\"];\n"
        "  \"z\" -> \"x\" [label=\"x,y,z\"];\n"
        "}\n");
}

TEST_CASE("self-loops are exported only on request") {
  auto g = gamma_graph(make_trivial({"a", "b"}));
  CHECK(g.proper_edges().empty());
  CHECK(export_dot(g).find("->") == std::string::npos);
  DotOptions o;
  o.self_loops = true;
  CHECK(export_dot(g, o).find("\"a\" -> \"a\"") != std::string::npos);
}

TEST_CASE("golden DOT files") {
  for (int k = 1; k <= 3; ++k) {
    auto e = sec5_extension(k);
    auto golden = read_text_file(data_dir / "golden" / ("sec5_Z" + std::to_string(k) + ".dot"));
    CHECK(export_dot(gamma_graph(e.assembled)) == golden);
  }
}

TEST_CASE("orbit partition") {
  auto z = sec5_extension(1).assembled;
  auto p = orbit_partition(z);
  REQUIRE(p.blocks.size() == 3);
  std::vector<std::vector<std::string>> named;
  for (const auto& b : p.blocks) {
    std::vector<std::string> n;
    for (Elem e : b) n.push_back(z.label(e));
    named.push_back(n);
  }
  CHECK(named[0] == std::vector<std::string>{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
  CHECK(named[1] == std::vector<std::string>{"z1", "z2", "z3", "z4"});
  CHECK(named[2] ==
        std::vector<std::string>{"alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3"});
  CHECK(orbit_partition(make_trivial({"a", "b"})).blocks.size() == 2);
}

TEST_CASE("isomorphism search agrees with the brute-force oracle") {
  auto keys = catalog_keys();
  for (const auto& a : keys)
    for (const auto& b : keys) {
      auto qa = catalog_entry(a).solution, qb = catalog_entry(b).solution;
      if (qa.size() > 5 || qb.size() > 5) continue;
      CAPTURE(a);
      CAPTURE(b);
      auto phi = find_isomorphism(qa, qb);
      CHECK(phi.has_value() == oracle::isomorphic(qa, qb));
      if (phi) CHECK(is_isomorphism(qa, qb, *phi));
    }
}

TEST_CASE("relabelled copies are isomorphic") {
  std::mt19937 rng(11);
  for (const char* key : {"sec5_X", "sec5_Z3", "perm_sym3"}) {
    auto q = catalog_entry(key).solution;
    for (int t = 0; t < 3; ++t) {
      Perm phi = random_perm(q.size(), rng);
      auto c = conjugate(q, phi, "copy");
      auto found = find_isomorphism(q, c);
      REQUIRE(found.has_value());
      CHECK(is_isomorphism(q, c, *found));
    }
  }
}

TEST_CASE("random small tables against the oracle") {
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto a = oracle::random_table(3, rng, t % 2 == 0);
    auto b = t % 3 == 0 ? conjugate(a, random_perm(3, rng), "b") : oracle::random_table(3, rng, t % 2 == 0);
    CHECK(find_isomorphism(a, b).has_value() == oracle::isomorphic(a, b));
    CHECK(automorphisms(a).size() == oracle::automorphism_count(a));
  }
}

TEST_CASE("automorphisms of the base sets") {
  CHECK(automorphisms(sec5_x()).size() == 128);
  CHECK(automorphisms(sec5_y()).size() == oracle::automorphism_count(sec5_y()));
  CHECK(automorphisms(make_trivial({"a", "b", "c"})).size() == 6);
  CHECK_THROWS_AS(automorphisms(make_trivial({"a", "b", "c", "d", "e", "f", "g"}), 10), Error);
}

TEST_CASE("gamma graph is invariant under automorphisms") {
  auto q = sec5_x();
  auto g = gamma_graph(q);
  for (const Perm& phi : automorphisms(q)) {
    std::vector<Edge> moved;
    for (const Edge& e : g.edges) moved.push_back({phi[e.source], phi[e.target], phi[e.label]});
    std::sort(moved.begin(), moved.end());
    CHECK(moved == g.edges);
  }
}

TEST_CASE("the three extensions are pairwise non-isomorphic") {
  auto z1 = sec5_extension(1).assembled, z2 = sec5_extension(2).assembled,
       z3 = sec5_extension(3).assembled;
  CHECK_FALSE(find_isomorphism(z1, z2).has_value());
  CHECK_FALSE(find_isomorphism(z1, z3).has_value());
  CHECK_FALSE(find_isomorphism(z2, z3).has_value());
  CHECK(find_isomorphism(z2, z2).has_value());
}
