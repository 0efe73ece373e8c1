#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidset/conditions.hpp"
#include "braidset/monoid.hpp"
#include "braidset/perm.hpp"
#include "braidset/qset.hpp"
#include "braidset/report.hpp"

namespace braidset {

// Y x X tables indexed alpha * |X| + x. `left` holds ^alpha x (an X index),
// `right` holds alpha^x (a Y index).
struct GroundActions {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Elem> left;
  std::vector<Elem> right;

  Elem act_left(Elem alpha, Elem x) const { return left[alpha * nx + x]; }
  Elem act_right(Elem alpha, Elem x) const { return right[alpha * nx + x]; }

  static GroundActions trivial(std::size_t nx, std::size_t ny);
};

// X x Y tables indexed x * |Y| + alpha: tri_r holds x |> alpha, tri_l holds x <| alpha.
struct AccompanyingActions {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Elem> tri_r;
  std::vector<Elem> tri_l;

  Elem act_tri_r(Elem x, Elem alpha) const { return tri_r[x * ny + alpha]; }
  Elem act_tri_l(Elem x, Elem alpha) const { return tri_l[x * ny + alpha]; }
};

// Z = X u Y with the X elements first.
struct ExtensionSet {
  QuadraticSet x_part;
  QuadraticSet y_part;
  GroundActions ground;
  AccompanyingActions accompanying;
  QuadraticSet assembled;

  std::size_t nx() const { return x_part.size(); }
  std::size_t ny() const { return y_part.size(); }
  Elem from_x(Elem x) const { return x; }
  Elem from_y(Elem alpha) const { return static_cast<Elem>(nx() + alpha); }
  bool in_x(Elem z) const { return z < nx(); }
};

// Throws CarrierOverlap or NotRegular.
ExtensionSet build_extension(const QuadraticSet& x_part, const QuadraticSet& y_part,
                             const GroundActions& ground, std::string name = "Z");

enum class MixedCondition {
  ml1, mr1, ml2, mr2, ml1a, mr1a, ml2w, mr2w,
  stu, csla, csra, mixed_weak_cyclic, fixed_pair_l, fixed_pair_r,
};

inline constexpr MixedCondition all_mixed_conditions[] = {
    MixedCondition::ml1,  MixedCondition::mr1,  MixedCondition::ml2,
    MixedCondition::mr2,  MixedCondition::ml1a, MixedCondition::mr1a,
    MixedCondition::ml2w, MixedCondition::mr2w, MixedCondition::stu,
    MixedCondition::csla, MixedCondition::csra, MixedCondition::mixed_weak_cyclic,
    MixedCondition::fixed_pair_l, MixedCondition::fixed_pair_r,
};

const char* to_string(MixedCondition c);
std::optional<MixedCondition> mixed_condition_from_string(std::string_view s);

ConditionReport check_mixed(const ExtensionSet& ext, MixedCondition cond,
                            std::size_t cap = default_witness_cap);
bool holds(const ExtensionSet& ext, MixedCondition cond);

// cond restricted to Z-triples whose parts follow `pattern`, e.g. "YXX".
bool holds_on_parts(const ExtensionSet& ext, Condition cond, std::string_view pattern);

// Part transfer (involutive, square-free, 2-cancellative) and restriction consistency.
NamedReports extension_invariants(const ExtensionSet& ext);

enum class ExtensionSuite {
  BZ, B_cancellative, matched_pair_ST, factorization_bellaT2, trivial_parts, theoremD_squarefree,
};

inline constexpr ExtensionSuite all_extension_suites[] = {
    ExtensionSuite::BZ,
    ExtensionSuite::B_cancellative,
    ExtensionSuite::matched_pair_ST,
    ExtensionSuite::factorization_bellaT2,
    ExtensionSuite::trivial_parts,
    ExtensionSuite::theoremD_squarefree,
};

const char* to_string(ExtensionSuite s);
std::optional<ExtensionSuite> extension_suite_from_string(std::string_view s);

// `degree` bounds the monoid-level suites (matched_pair_ST, factorization_bellaT2).
SuiteReport verify_extension_theorem(const ExtensionSet& ext, ExtensionSuite which,
                                     int degree = 3);

// Word actions of T = S(Y) on S = S(X) induced by the ground actions, on
// words indexed in X and Y respectively.
WordActions ground_word_actions(const ExtensionSet& ext);
WordActions accompanying_word_actions(const ExtensionSet& ext);

// X u X' with ground actions taken from qs itself. Throws PrerequisiteFailed(ybe).
ExtensionSet double_braided_set(const QuadraticSet& qs);

struct StrongTwistedUnionReport {
  NamedReports conditions;  // ml1, mr1, stu, then csla, csra when evaluated
  bool action_extension = false;
  bool stu = false;
  bool strong_twisted_union = false;
  bool ybe = false;
  std::optional<bool> prop_hypotheses;  // lri, 2-cancellative parts, length-3 cancellation
  std::optional<bool> prop_biconditional;
  std::vector<std::string> notes;
};

StrongTwistedUnionReport strong_twisted_union_report(const ExtensionSet& ext);

enum class ExtensionFilter { ybe, square_free, involutive, lri, stu };

const char* to_string(ExtensionFilter f);
std::optional<ExtensionFilter> extension_filter_from_string(std::string_view s);
bool passes(const ExtensionSet& ext, ExtensionFilter f);

// Candidate left/right actions for a group of elements, as permutations of Z.
struct FamilyAssignment {
  std::vector<Elem> elements;  // Z indices
  Perm perm;                   // permutation of Z
};

struct FamilyOption {
  std::string name;
  std::vector<FamilyAssignment> left;
  std::vector<FamilyAssignment> right;
};

struct FamilySlot {
  std::string name;
  std::vector<FamilyOption> options;
};

struct PermutationFamily {
  std::vector<FamilySlot> slots;
  bool lri_completion = true;
};

// Ground actions from one choice per slot. Unassigned left actions are the
// identity; with lri completion alpha^x = L_x^{-1}(alpha).
GroundActions family_ground(const QuadraticSet& x_part, const QuadraticSet& y_part,
                            const PermutationFamily& family,
                            const std::vector<std::size_t>& choice);

enum class EnumerationMode { full_table, permutation_family };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::full_table;
  std::vector<ExtensionFilter> filters;
  std::size_t table_budget = 9;  // max |X| * |Y| in full_table mode
  std::size_t limit = 0;         // 0: no limit on emitted extensions
  const PermutationFamily* family = nullptr;
};

struct EnumerationSummary {
  std::size_t visited = 0;
  std::size_t regular = 0;
  std::size_t emitted = 0;
  bool truncated = false;
};

// Calls `emit` for every passing extension in deterministic order; `emit`
// returns false to stop. Throws BudgetExceeded.
EnumerationSummary enumerate_extensions(const QuadraticSet& x_part, const QuadraticSet& y_part,
                                        const EnumerationOptions& options,
                                        const std::function<bool(const ExtensionSet&)>& emit);

// Checks a strong matched pair (S,T) and the conditions making S x T a
// regular extension of M3-monoids, then builds r_U by composition. With
// `realization` (the monoid of Z, X letters first) r_U is compared with the
// word actions of Z classwise.
NamedReports m3_extension_check(const TruncatedMonoid& S, const TruncatedMonoid& T,
                                const WordActions& pair_actions, int N,
                                const TruncatedMonoid* realization = nullptr);

struct AutomorphismCheck {
  std::string actor;
  std::string target;  // "X", "Y" or "Z"
  bool automorphism = false;
};

struct AutomorphismReport {
  std::vector<AutomorphismCheck> y_on_x;        // L_alpha restricted to X
  std::vector<AutomorphismCheck> x_on_y;        // L_x restricted to Y
  std::vector<AutomorphismCheck> x_on_y_right;  // alpha -> alpha^x
  std::vector<AutomorphismCheck> z_on_z;        // L_z on Z
  // ^alpha(xy) = ^alpha x . ^alpha y for all x, y: Y acts diagonally on words of X.
  bool y_diagonal_on_x = false;
  bool x_diagonal_on_y = false;

  bool all_y_on_x() const;
  bool all_x_on_y() const;
  bool all_z_on_z() const;
};

AutomorphismReport automorphism_action_check(const ExtensionSet& ext);

}  // namespace braidset
