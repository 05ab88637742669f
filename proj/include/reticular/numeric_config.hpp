#pragma once

#include <string>

#include "reticular/kernels/poly_eval.hpp"

namespace reticular {

struct NumericConfig {
  double tol_eq = 1e-9;
  double tol_deg = 1e-6;
  double seed_lo = -2.0;
  double seed_hi = 2.0;
  int seeds_per_axis = 7;
  int newton_max_iter = 50;
  double damping = 0.5;
  double densify_spacing = 5e-4;
  double dedupe_tol = 1e-7;
  int threads = 0;  // 0: hardware concurrency
  kernels::Backend simd = kernels::Backend::Auto;

  // key=value lines, '#' comments. Unknown keys are an error.
  void apply(const std::string& key, const std::string& value);
  static NumericConfig from_file(const std::string& path);
  static NumericConfig from_string(const std::string& text);
};

// "a:b" or a single half-width "w" meaning -w:w.
std::pair<double, double> parse_interval(const std::string& s);

}  // namespace reticular
