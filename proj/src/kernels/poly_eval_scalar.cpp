#include "reticular/kernels/poly_eval.hpp"

#include <vector>

namespace reticular::kernels::detail {

// Reference kernel. Per point: power tables by repeated multiplication,
// then each term is coefficient * pow(v0) * pow(v1) * ... added in term
// order. The vector kernels mirror this sequence lane by lane.
void eval_batch_scalar(const CompiledPoly& p, const double* points, std::size_t count, double* out) {
  const std::size_t nv = p.nvars;
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(p.max_exp[v]) + 1;
  std::vector<double> pw(offset[nv]);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t v = 0; v < nv; ++v) {
      double* row = pw.data() + offset[v];
      const double x = points[v * count + i];
      row[0] = 1.0;
      for (int e = 1; e <= p.max_exp[v]; ++e) row[e] = row[e - 1] * x;
    }
    double acc = 0.0;
    for (std::size_t t = 0; t < p.nterms(); ++t) {
      double term = p.coeffs[t];
      const int* e = p.exps.data() + t * nv;
      for (std::size_t v = 0; v < nv; ++v) {
        if (e[v] != 0) term = term * pw[offset[v] + static_cast<std::size_t>(e[v])];
      }
      acc = acc + term;
    }
    out[i] = acc;
  }
}

}  // namespace reticular::kernels::detail
