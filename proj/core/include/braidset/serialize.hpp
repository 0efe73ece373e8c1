#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "braidset/conditions.hpp"
#include "braidset/extension.hpp"
#include "braidset/monoid.hpp"
#include "braidset/qset.hpp"

namespace braidset {

// Full form {"name", "elements", "r": [{"in": [a, b], "out": [c, d]}, ...]} or
// a shorthand with "elements" and one of "permutational": {"f", "g"},
// "trivial": true, "identity": true.
QuadraticSet load_solution(std::string_view document, std::string fallback_name = "X");
QuadraticSet load_solution_file(const std::filesystem::path& path);

// Canonical full form, pairs in carrier order.
std::string solution_to_json(const QuadraticSet& qs);

std::string report_to_json(const ConditionReport& r);
std::string profile_to_json(const Profile& p);
std::string reports_to_json(const NamedReports& r);
std::string suite_to_json(const SuiteReport& s);

struct GroundDocument {
  QuadraticSet x_part;
  QuadraticSet y_part;
  GroundActions ground;
};

// {"x_solution", "y_solution", "ground": [{"alpha", "x", "left", "right"}, ...]}
// or the shorthand "L_alpha" (cycles over X, keyed by space-separated groups of
// Y labels), "R_x" (cycles over Y) and "L_x" (cycles over Y, used by
// "lri_completion": true to set alpha^x = L_x^{-1}(alpha)). Solutions are paths
// relative to `base_dir` or inline documents; explicit parts override them.
GroundDocument load_ground(std::string_view document, const std::filesystem::path& base_dir,
                           const QuadraticSet* x_part = nullptr,
                           const QuadraticSet* y_part = nullptr);
GroundDocument load_ground_file(const std::filesystem::path& path,
                                const QuadraticSet* x_part = nullptr,
                                const QuadraticSet* y_part = nullptr);

// Shorthand L_alpha / L_x form with lri_completion when Z has lri, the full
// "ground" list otherwise. Parts are referenced by the given paths.
std::string ground_to_json(const ExtensionSet& ext, const std::string& x_ref,
                           const std::string& y_ref);

// {"lri_completion": bool, "slots": [{"name", "options": [{"name", "left": {group:
// cycles}, "right": {group: cycles}}]}]} with groups and cycles over X u Y.
PermutationFamily load_family(std::string_view document, const QuadraticSet& x_part,
                              const QuadraticSet& y_part);
PermutationFamily load_family_file(const std::filesystem::path& path,
                                   const QuadraticSet& x_part, const QuadraticSet& y_part);

std::string family_to_json(const PermutationFamily& family, const QuadraticSet& x_part,
                           const QuadraticSet& y_part);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace braidset
