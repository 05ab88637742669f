#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reticular/local_algebra.hpp"
#include "reticular/unfoldings.hpp"

namespace reticular {

struct CatalogEntry {
  std::string key;          // e.g. "F4+", "C3-", "A1"
  std::string printed_label;  // the printed line, verbatim
  std::string class_label;  // what classify() reports for the germ
  Kind kind = Kind::Lagrangian;
  Mode mode = Mode::Rplus;  // Rplus for Lagrangian, K for Legendrian
  int r = 0;
  int k = 0;
  int n = 0;  // unfolding parameters, z excluded
  std::string family_text;
  GeneratingFamily family;
  CornerPoly germ;  // family with every parameter set to zero
  std::string note;  // corrections applied to the printed family
};

// All entries: Lagrangian first, then Legendrian, each in printed order.
const std::vector<CatalogEntry>& catalog();

// Throws std::out_of_range for unknown keys.
const CatalogEntry& catalog_get(const std::string& key, Kind kind);
std::optional<CatalogEntry> catalog_find(const std::string& key, Kind kind);

// Entries of the given kind with n <= n_max, optionally restricted to r.
std::vector<CatalogEntry> catalog_list(Kind kind, std::optional<int> r = std::nullopt, int n_max = 1 << 20);

}  // namespace reticular
