#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidset/report.hpp"

namespace braidset {

// A permutation of {0..n-1} stored as its image vector.
using Perm = std::vector<Elem>;

Perm identity_perm(std::size_t n);
bool is_permutation(const Perm& p);
Perm inverse(const Perm& p);
// (a * b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b);
Perm power(const Perm& p, int k);

// Parses cycle notation such as "(a b c)(d e)". Fixed points may be omitted.
// `lookup` maps a label to its index or returns nullopt.
Perm parse_cycles(std::string_view text, std::size_t n,
                  const std::function<std::optional<Elem>(std::string_view)>& lookup);

std::string format_cycles(const Perm& p, const std::vector<std::string>& labels);

}  // namespace braidset
