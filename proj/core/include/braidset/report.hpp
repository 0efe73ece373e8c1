#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidset {

using Elem = std::uint32_t;
using Pair = std::pair<Elem, Elem>;

inline constexpr std::size_t default_witness_cap = 10;

struct Witness {
  std::vector<Elem> args;
  std::vector<Elem> lhs;
  std::vector<Elem> rhs;
  std::string text;
};

// A verdict for one named condition. When `skipped` is non-empty the
// condition was not evaluated and `holds` is false.
struct ConditionReport {
  std::string condition;
  bool holds = true;
  std::vector<Witness> witnesses;
  std::size_t violations = 0;
  std::size_t cap = default_witness_cap;
  std::string skipped;

  ConditionReport() = default;
  explicit ConditionReport(std::string name, std::size_t witness_cap = default_witness_cap)
      : condition(std::move(name)), cap(witness_cap == 0 ? 1 : witness_cap) {}

  void fail(Witness w) {
    holds = false;
    ++violations;
    if (witnesses.size() < cap) witnesses.push_back(std::move(w));
  }

  static ConditionReport skip(std::string name, std::string reason) {
    ConditionReport r(std::move(name));
    r.holds = false;
    r.skipped = std::move(reason);
    return r;
  }

  bool evaluated() const { return skipped.empty(); }
};

struct Clause {
  std::string name;
  bool holds = true;
};

struct SuiteReport {
  std::string suite;
  bool hypotheses_met = true;
  std::string hypotheses;
  std::vector<std::pair<std::string, bool>> facts;
  std::vector<Clause> clauses;

  void fact(std::string name, bool value) { facts.emplace_back(std::move(name), value); }
  void clause(std::string name, bool value) { clauses.push_back({std::move(name), value}); }

  // A suite passes when its hypotheses fail or when every clause holds.
  bool ok() const {
    if (!hypotheses_met) return true;
    for (const auto& c : clauses)
      if (!c.holds) return false;
    return true;
  }
};

}  // namespace braidset
