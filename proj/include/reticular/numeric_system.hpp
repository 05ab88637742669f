#pragma once

#include <cstddef>
#include <vector>

#include "reticular/kernels/poly_eval.hpp"
#include "reticular/poly.hpp"

namespace reticular {

// Points stored variable-major: data[c * count + i].
struct PointBatch {
  std::size_t ncoords = 0;
  std::size_t count = 0;
  std::vector<double> data;

  PointBatch() = default;
  PointBatch(std::size_t nc, std::size_t n) : ncoords(nc), count(n), data(nc * n, 0.0) {}
  double& at(std::size_t c, std::size_t i) { return data[c * count + i]; }
  double at(std::size_t c, std::size_t i) const { return data[c * count + i]; }
  std::vector<double> point(std::size_t i) const;
  void set_point(std::size_t i, const std::vector<double>& p);
  static PointBatch from_points(std::size_t nc, const std::vector<std::vector<double>>& pts);
};

struct NewtonOptions {
  int max_iter = 50;
  double damping = 0.5;
  double tol_stop = 1e-14;
  double tol_accept = 1e-10;
  double blowup = 1e6;
};

// Polynomial equations over all coordinates of a layout; Newton moves only
// the listed unknown coordinates. Fewer equations than unknowns gives
// minimum-norm steps (used for walking along curves).
class NumericSystem {
 public:
  NumericSystem(const std::vector<CornerPoly>& eqs, std::vector<std::size_t> unknowns,
                kernels::Backend backend = kernels::Backend::Auto);

  std::size_t neq() const { return eqs_.size(); }
  std::size_t nunk() const { return unknowns_.size(); }
  std::size_t ncoords() const { return ncoords_; }
  const std::vector<std::size_t>& unknowns() const { return unknowns_; }

  // out[e * count + i]
  void residuals(const PointBatch& b, std::vector<double>& out) const;
  // out[(e * nunk + u) * count + i]
  void jacobian(const PointBatch& b, std::vector<double>& out) const;

  // Updates b in place; returns 1 for points that converged.
  std::vector<char> newton(PointBatch& b, const NewtonOptions& opt) const;

  // Unit tangent of the solution curve at each point (neq == nunk - 1);
  // empty vector where the Jacobian is rank deficient.
  std::vector<std::vector<double>> tangents(const PointBatch& b) const;

 private:
  std::size_t ncoords_ = 0;
  std::vector<std::size_t> unknowns_;
  std::vector<kernels::CompiledPoly> eqs_;
  std::vector<kernels::CompiledPoly> jac_;
  kernels::Backend backend_;
};

// Dense helpers, row-major.
bool solve_dense(std::vector<double> A, std::vector<double>& b, std::size_t n);
double det_dense(std::vector<double> A, std::size_t n);
// Step solving J step = F: exact for square J, minimum norm when wide,
// least squares when tall.
bool newton_step(const std::vector<double>& J, const std::vector<double>& F, std::size_t m, std::size_t n,
                 std::vector<double>& step);

}  // namespace reticular
