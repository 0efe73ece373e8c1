#include "braidset/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "braidset/conditions.hpp"
#include "braidset/error.hpp"

namespace braidset {

std::vector<Edge> LabeledDigraph::proper_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges)
    if (e.source != e.target) out.push_back(e);
  return out;
}

LabeledDigraph gamma_graph(const QuadraticSet& qs) {
  LabeledDigraph g;
  g.vertices = qs.labels();
  for (Elem x = 0; x < qs.size(); ++x)
    for (Elem z = 0; z < qs.size(); ++z) g.edges.push_back({x, qs.left(z, x), z});
  std::sort(g.edges.begin(), g.edges.end());
  g.lri = holds(qs, Condition::lri);
  return g;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OrbitPartition orbit_partition(const QuadraticSet& qs) {
  const std::size_t n = qs.size();
  UnionFind uf(n);
  for (Elem z = 0; z < n; ++z)
    for (Elem x = 0; x < n; ++x) uf.unite(x, qs.left(z, x));
  OrbitPartition p;
  p.group_orbits = holds(qs, Predicate::left_nondegenerate);
  std::vector<int> slot(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem root = uf.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(p.blocks.size());
      p.blocks.emplace_back();
    }
    p.blocks[slot[root]].push_back(x);
  }
  return p;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const LabeledDigraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << quoted(options.name) << " {\n";
  for (const auto& v : g.vertices) os << "  " << quoted(v) << ";\n";
  std::size_t i = 0;
  while (i < g.edges.size()) {
    const Edge& e = g.edges[i];
    std::size_t j = i;
    std::string labels;
    while (j < g.edges.size() && g.edges[j].source == e.source && g.edges[j].target == e.target) {
      labels += (j == i ? "" : ",") + g.vertices[g.edges[j].label];
      ++j;
    }
    if (e.source != e.target || options.self_loops) {
      os << "  " << quoted(g.vertices[e.source]) << " -> " << quoted(g.vertices[e.target]);
      if (options.labels) os << " [label=" << quoted(labels) << "]";
      os << ";\n";
    }
    i = j;
  }
  os << "}\n";
  return os.str();
}

bool is_isomorphism(const QuadraticSet& a, const QuadraticSet& b, const Perm& phi) {
  if (a.size() != b.size() || phi.size() != a.size() || !is_permutation(phi)) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      Pair p = a.apply(x, y);
      if (b.apply(phi[x], phi[y]) != Pair{phi[p.first], phi[p.second]}) return false;
    }
  return true;
}

namespace {

// Per-element data preserved by every isomorphism.
std::vector<std::vector<std::size_t>> invariants(const QuadraticSet& q) {
  const std::size_t n = q.size();
  OrbitPartition orbits = orbit_partition(q);
  std::vector<std::size_t> block_size(n);
  for (const auto& b : orbits.blocks)
    for (Elem x : b) block_size[x] = b.size();
  std::vector<std::vector<std::size_t>> inv(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t fixed_first = 0, fixed_second = 0, moved_by = 0, out = 0, in = 0;
    std::vector<char> targets(n, 0), sources(n, 0);
    for (Elem y = 0; y < n; ++y) {
      if (q.apply(x, y) == Pair{x, y}) ++fixed_first;
      if (q.apply(y, x) == Pair{y, x}) ++fixed_second;
      if (q.left(x, y) != y) ++moved_by;  // arrows carrying label x
      targets[q.left(y, x)] = 1;
      for (Elem z = 0; z < n; ++z)
        if (q.left(z, y) == x) sources[y] = 1;
    }
    for (Elem y = 0; y < n; ++y) {
      if (y != x) {
        out += targets[y];
        in += sources[y];
      }
    }
    Pair self = q.apply(x, x);
    inv[x] = {fixed_first, fixed_second, moved_by, out, in, block_size[x],
              static_cast<std::size_t>(self.first == x), static_cast<std::size_t>(self.second == x)};
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const QuadraticSet& a, const QuadraticSet& b, std::size_t budget, bool all)
      : a_(a), b_(b), n_(a.size()), budget_(budget), all_(all),
        inv_a_(invariants(a)), inv_b_(invariants(b)),
        phi_(n_, unset), psi_(n_, unset) {}

  std::vector<Perm> run() {
    auto ia = inv_a_, ib = inv_b_;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (a_.size() != b_.size() || ia != ib) return {};
    search(0);
    return found_;
  }

 private:
  static constexpr Elem unset = static_cast<Elem>(-1);

  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    std::vector<std::pair<Elem, Elem>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (phi_[u] != unset) {
        if (phi_[u] != v) return false;
        continue;
      }
      if (psi_[v] != unset || inv_a_[u] != inv_b_[v]) return false;
      phi_[u] = v;
      psi_[v] = u;
      trail.push_back(u);
      for (Elem t = 0; t < n_; ++t) {
        if (phi_[t] == unset) continue;
        for (auto [p, q] : {std::pair{u, t}, std::pair{t, u}}) {
          Pair ra = a_.apply(p, q), rb = b_.apply(phi_[p], phi_[q]);
          queue.emplace_back(ra.first, rb.first);
          queue.emplace_back(ra.second, rb.second);
        }
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem u : trail) {
      psi_[phi_[u]] = unset;
      phi_[u] = unset;
    }
    trail.clear();
  }

  bool search(Elem x) {
    while (x < n_ && phi_[x] != unset) ++x;
    if (x == n_) {
      found_.push_back(phi_);
      return !all_;
    }
    for (Elem y = 0; y < n_; ++y) {
      if (psi_[y] != unset || inv_a_[x] != inv_b_[y]) continue;
      if (++nodes_ > budget_)
        throw Error(ErrorKind::budget_exceeded,
                    "isomorphism search exceeded " + std::to_string(budget_) + " nodes");
      std::vector<Elem> trail;
      if (assign(x, y, trail) && search(x + 1)) return true;
      undo(trail);
    }
    return false;
  }

  const QuadraticSet& a_;
  const QuadraticSet& b_;
  std::size_t n_;
  std::size_t budget_;
  bool all_;
  std::vector<std::vector<std::size_t>> inv_a_, inv_b_;
  Perm phi_, psi_;
  std::size_t nodes_ = 0;
  std::vector<Perm> found_;
};

}  // namespace

std::optional<Perm> find_isomorphism(const QuadraticSet& a, const QuadraticSet& b,
                                     std::size_t node_budget) {
  auto found = IsoSearch(a, b, node_budget, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Perm> automorphisms(const QuadraticSet& qs, std::size_t node_budget) {
  auto found = IsoSearch(qs, qs, node_budget, true).run();
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace braidset
