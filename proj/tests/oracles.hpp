#pragma once

// Brute-force reference computations written against the raw table only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "braidset/qset.hpp"

namespace oracle {

using braidset::Elem;
using braidset::Pair;
using braidset::QuadraticSet;
using Triple = std::array<Elem, 3>;

inline Triple r12(const QuadraticSet& q, Triple t) {
  Pair p = q.apply(t[0], t[1]);
  return {p.first, p.second, t[2]};
}

inline Triple r23(const QuadraticSet& q, Triple t) {
  Pair p = q.apply(t[1], t[2]);
  return {t[0], p.first, p.second};
}

inline bool ybe(const QuadraticSet& q) {
  const Elem n = static_cast<Elem>(q.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Triple t{a, b, c};
        if (r12(q, r23(q, r12(q, t))) != r23(q, r12(q, r23(q, t)))) return false;
      }
  return true;
}

inline bool involutive(const QuadraticSet& q) {
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b) {
      Pair p = q.apply(a, b);
      if (q.apply(p.first, p.second) != Pair{a, b}) return false;
    }
  return true;
}

inline bool bijective(const QuadraticSet& q) {
  std::set<Pair> img;
  for (const auto& p : q.table()) img.insert(p);
  return img.size() == q.table().size();
}

inline bool left_nondegenerate(const QuadraticSet& q) {
  for (Elem a = 0; a < q.size(); ++a) {
    std::set<Elem> img;
    for (Elem b = 0; b < q.size(); ++b) img.insert(q.left(a, b));
    if (img.size() != q.size()) return false;
  }
  return true;
}

inline bool right_nondegenerate(const QuadraticSet& q) {
  for (Elem b = 0; b < q.size(); ++b) {
    std::set<Elem> img;
    for (Elem a = 0; a < q.size(); ++a) img.insert(q.right(a, b));
    if (img.size() != q.size()) return false;
  }
  return true;
}

inline bool square_free(const QuadraticSet& q) {
  for (Elem a = 0; a < q.size(); ++a)
    if (q.apply(a, a) != Pair{a, a}) return false;
  return true;
}

// Congruence classes of words of length n by breadth-first search over the
// undirected graph of single replacements.
inline std::vector<int> word_classes(const QuadraticSet& q, int n, int* count = nullptr) {
  const std::size_t k = q.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  auto decode = [&](std::size_t code) {
    std::vector<Elem> w(n);
    for (int i = n - 1; i >= 0; --i) {
      w[i] = static_cast<Elem>(code % k);
      code /= k;
    }
    return w;
  };
  auto encode = [&](const std::vector<Elem>& w) {
    std::size_t c = 0;
    for (Elem e : w) c = c * k + e;
    return c;
  };
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t c = 0; c < total; ++c) {
    auto w = decode(c);
    for (int i = 0; i + 1 < n; ++i) {
      auto v = w;
      Pair p = q.apply(w[i], w[i + 1]);
      v[i] = p.first;
      v[i + 1] = p.second;
      std::size_t d = encode(v);
      adj[c].push_back(d);
      adj[d].push_back(c);
    }
  }
  std::vector<int> cls(total, -1);
  int next = 0;
  for (std::size_t s = 0; s < total; ++s) {
    if (cls[s] >= 0) continue;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    cls[s] = next;
    while (!bfs.empty()) {
      auto c = bfs.front();
      bfs.pop();
      for (auto d : adj[c])
        if (cls[d] < 0) {
          cls[d] = next;
          bfs.push(d);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return cls;
}

inline bool conjugate_by(const QuadraticSet& a, const QuadraticSet& b, const std::vector<Elem>& phi) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      Pair p = a.apply(x, y);
      if (b.apply(phi[x], phi[y]) != Pair{phi[p.first], phi[p.second]}) return false;
    }
  return true;
}

// Tries every bijection.
inline bool isomorphic(const QuadraticSet& a, const QuadraticSet& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> phi(a.size());
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (conjugate_by(a, b, phi)) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

inline std::size_t automorphism_count(const QuadraticSet& a) {
  std::vector<Elem> phi(a.size());
  std::iota(phi.begin(), phi.end(), 0);
  std::size_t n = 0;
  do {
    n += conjugate_by(a, a, phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return n;
}

// Every bijective table on {0..n-1}^2, visited through the permutation of codes.
template <class F>
void for_each_bijective_table(std::size_t n, F f) {
  std::vector<Elem> codes(n * n);
  std::iota(codes.begin(), codes.end(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  do {
    std::vector<Pair> t;
    for (Elem c : codes) t.push_back({static_cast<Elem>(c / n), static_cast<Elem>(c % n)});
    f(QuadraticSet("t", labels, std::move(t)));
  } while (std::next_permutation(codes.begin(), codes.end()));
}

inline QuadraticSet random_table(std::size_t n, std::mt19937& rng, bool bijective) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Pair> t(n * n);
  if (bijective) {
    std::vector<Elem> codes(n * n);
    std::iota(codes.begin(), codes.end(), 0);
    std::shuffle(codes.begin(), codes.end(), rng);
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = {static_cast<Elem>(codes[i] / n), static_cast<Elem>(codes[i] % n)};
  } else {
    std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n - 1));
    for (auto& p : t) p = {d(rng), d(rng)};
  }
  return QuadraticSet("random", labels, std::move(t));
}

}  // namespace oracle
