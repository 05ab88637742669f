#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reticular/numeric_config.hpp"
#include "reticular/unfoldings.hpp"

namespace reticular {

struct MeshPoint {
  std::vector<double> coords;
  std::string stratum;
};

struct DiscriminantMesh {
  std::string kind;  // caustic or wavefront
  int ambient_dim = 0;
  std::vector<std::string> coord_names;
  std::vector<std::string> strata;  // every stratum considered, in order
  std::vector<MeshPoint> points;    // sorted lexicographically
  int res = 0;
  std::vector<std::pair<double, double>> region;
  double tol_eq = 0;
  double tol_deg = 0;
  std::size_t dropped_seeds = 0;
  std::size_t rejected_points = 0;

  std::size_t count(const std::string& stratum) const;
};

using Region = std::vector<std::pair<double, double>>;

// "empty" for the empty set, otherwise the sorted 1-based elements, e.g. "12".
std::string subset_label(unsigned mask, int r);

// region has one interval per parameter q.
DiscriminantMesh caustic(const GeneratingFamily& F, const Region& region, int res,
                         const NumericConfig& cfg = {});
// region has one interval per q, optionally followed by a z interval that
// bounds the z seeds and the output.
DiscriminantMesh wavefront(const GeneratingFamily& F, const Region& region, int res,
                           const NumericConfig& cfg = {});

}  // namespace reticular
