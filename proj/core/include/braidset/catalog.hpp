#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidset/extension.hpp"
#include "braidset/qset.hpp"

namespace braidset {

struct CatalogEntry {
  std::string key;
  std::string description;
  QuadraticSet solution;                 // the assembled table for extensions
  std::optional<ExtensionSet> extension;
};

std::vector<std::string> catalog_keys();
// Throws UnknownLabel for an unknown key.
CatalogEntry catalog_entry(std::string_view key);
std::vector<CatalogEntry> catalog();

// Canonical JSON of the entry's pipeline results, compared against goldens.
std::string catalog_profile(const CatalogEntry& entry);

// The 12-element X and the 6-element Y of the three-orbit example. X is
// rebuilt from its left actions with R_b = L_b^{-1}.
QuadraticSet sec5_x();
QuadraticSet sec5_y();

// Slots: actions of Y on x u y, of Y on z, of x u y on Y, of z on Y.
PermutationFamily sec5_family();
// which = 1, 2, 3.
std::vector<std::size_t> sec5_choice(int which);
ExtensionSet sec5_extension(int which);

}  // namespace braidset
