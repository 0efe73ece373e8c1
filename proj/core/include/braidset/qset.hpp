#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "braidset/perm.hpp"
#include "braidset/report.hpp"

namespace braidset {

// A finite set X with a map r : X x X -> X x X stored as a full table.
// r need not be bijective; predicates report on it instead.
class QuadraticSet {
 public:
  QuadraticSet() = default;
  // table[x * n + y] = r(x, y)
  QuadraticSet(std::string name, std::vector<std::string> labels, std::vector<Pair> table);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  std::optional<Elem> find(std::string_view label) const;
  Elem index(std::string_view label) const;

  Pair apply(Elem x, Elem y) const { return table_[x * size() + y]; }
  Elem left(Elem x, Elem y) const { return table_[x * size() + y].first; }
  Elem right(Elem x, Elem y) const { return table_[x * size() + y].second; }

  const std::vector<Pair>& table() const { return table_; }
  QuadraticSet renamed(std::string name) const;

  friend bool operator==(const QuadraticSet& a, const QuadraticSet& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Pair> table_;
};

// r(x, y) = (^x y, x^y)
Pair apply_r(const QuadraticSet& qs, Elem x, Elem y);
// ^x y
Elem left_action(const QuadraticSet& qs, Elem x, Elem y);
// x^y, that is R_y(x)
Elem right_action(const QuadraticSet& qs, Elem x, Elem y);

enum class Predicate {
  bijective,
  involutive,
  square_free,
  left_nondegenerate,
  right_nondegenerate,
  nondegenerate,
  left_2cancellative,
  right_2cancellative,
  two_cancellative,
};

inline constexpr Predicate all_predicates[] = {
    Predicate::bijective,           Predicate::involutive,          Predicate::square_free,
    Predicate::left_nondegenerate,  Predicate::right_nondegenerate, Predicate::nondegenerate,
    Predicate::left_2cancellative,  Predicate::right_2cancellative, Predicate::two_cancellative,
};

const char* to_string(Predicate p);
std::optional<Predicate> predicate_from_string(std::string_view s);

ConditionReport predicate(const QuadraticSet& qs, Predicate which,
                          std::size_t cap = default_witness_cap);
bool holds(const QuadraticSet& qs, Predicate which);

struct PairOrbit {
  Pair start;
  std::vector<Pair> cycle;  // starts with `start`
  std::size_t length = 0;
};

PairOrbit pair_orbit(const QuadraticSet& qs, Elem x, Elem y);

std::vector<Pair> fixed_pairs(const QuadraticSet& qs);

struct TMap {
  Perm t;
  ConditionReport report;
};

// T(y) = R_y^{-1}(y). Requires involutive, right non-degenerate and r1.
TMap t_map(const QuadraticSet& qs);

QuadraticSet make_permutational(const std::vector<std::string>& labels, const Perm& f,
                                const Perm& g, std::string name = "permutational");
QuadraticSet make_trivial(const std::vector<std::string>& labels, std::string name = "trivial");
QuadraticSet make_identity(const std::vector<std::string>& labels,
                           std::string name = "identity");

// The table of r^{-1}. Requires a bijective table.
QuadraticSet inverse_solution(const QuadraticSet& qs);

// Relabels qs by a bijection phi: the result maps (phi x, phi y) to phi x phi of r(x, y).
QuadraticSet conjugate(const QuadraticSet& qs, const Perm& phi, std::string name);

std::string format_pair(const QuadraticSet& qs, Pair p);
std::string format_elems(const QuadraticSet& qs, const std::vector<Elem>& xs);

}  // namespace braidset
