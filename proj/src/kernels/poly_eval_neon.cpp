#include <arm_neon.h>

#include <vector>

#include "reticular/kernels/poly_eval.hpp"

namespace reticular::kernels::detail {

void eval_batch_neon(const CompiledPoly& p, const double* points, std::size_t count, double* out) {
  const std::size_t nv = p.nvars;
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(p.max_exp[v]) + 1;
  std::vector<float64x2_t> pw(offset[nv]);
  const std::size_t full = count - count % 2;
  for (std::size_t i = 0; i < full; i += 2) {
    for (std::size_t v = 0; v < nv; ++v) {
      float64x2_t* row = pw.data() + offset[v];
      const float64x2_t x = vld1q_f64(points + v * count + i);
      row[0] = vdupq_n_f64(1.0);
      for (int e = 1; e <= p.max_exp[v]; ++e) row[e] = vmulq_f64(row[e - 1], x);
    }
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t t = 0; t < p.nterms(); ++t) {
      float64x2_t term = vdupq_n_f64(p.coeffs[t]);
      const int* e = p.exps.data() + t * nv;
      for (std::size_t v = 0; v < nv; ++v) {
        if (e[v] != 0) term = vmulq_f64(term, pw[offset[v] + static_cast<std::size_t>(e[v])]);
      }
      acc = vaddq_f64(acc, term);
    }
    vst1q_f64(out + i, acc);
  }
  if (full == count) return;
  std::vector<double> tail(nv);
  for (std::size_t v = 0; v < nv; ++v) tail[v] = points[v * count + full];
  eval_batch_scalar(p, tail.data(), 1, out + full);
}

}  // namespace reticular::kernels::detail
