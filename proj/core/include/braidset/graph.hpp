#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidset/perm.hpp"
#include "braidset/qset.hpp"

namespace braidset {

struct Edge {
  Elem source = 0;
  Elem target = 0;
  Elem label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Gamma(X, r): an arrow x -> y labelled z whenever ^z x = y. Self-loops are
// kept here and dropped on export unless asked for.
struct LabeledDigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;  // sorted by (source, target, label)
  bool lri = false;

  std::vector<Edge> proper_edges() const;
};

LabeledDigraph gamma_graph(const QuadraticSet& qs);

struct OrbitPartition {
  std::vector<std::vector<Elem>> blocks;  // ordered by least element
  bool group_orbits = false;              // false: weak components of x -> ^z x
};

OrbitPartition orbit_partition(const QuadraticSet& qs);

struct DotOptions {
  bool self_loops = false;
  bool labels = true;
  std::string name = "G";
};

std::string export_dot(const LabeledDigraph& g, const DotOptions& options = {});

inline constexpr std::size_t default_search_budget = 5'000'000;

// phi with (phi x phi) r1 = r2 (phi x phi).
bool is_isomorphism(const QuadraticSet& a, const QuadraticSet& b, const Perm& phi);

// Backtracking with invariant pruning. Throws BudgetExceeded when the node
// budget runs out.
std::optional<Perm> find_isomorphism(const QuadraticSet& a, const QuadraticSet& b,
                                     std::size_t node_budget = default_search_budget);

// Every automorphism, in lexicographic order of the image vectors.
std::vector<Perm> automorphisms(const QuadraticSet& qs,
                                std::size_t node_budget = default_search_budget);

}  // namespace braidset
