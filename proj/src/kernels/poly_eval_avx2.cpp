#include <immintrin.h>

#include <vector>

#include "reticular/kernels/poly_eval.hpp"

namespace reticular::kernels::detail {

namespace {
struct Lane {
  __m256d v;
};
}  // namespace

void eval_batch_avx2(const CompiledPoly& p, const double* points, std::size_t count, double* out) {
  const std::size_t nv = p.nvars;
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(p.max_exp[v]) + 1;
  std::vector<Lane> pw(offset[nv]);
  const std::size_t full = count - count % 4;
  for (std::size_t i = 0; i < full; i += 4) {
    for (std::size_t v = 0; v < nv; ++v) {
      Lane* row = pw.data() + offset[v];
      const __m256d x = _mm256_loadu_pd(points + v * count + i);
      row[0].v = _mm256_set1_pd(1.0);
      for (int e = 1; e <= p.max_exp[v]; ++e) row[e].v = _mm256_mul_pd(row[e - 1].v, x);
    }
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < p.nterms(); ++t) {
      __m256d term = _mm256_set1_pd(p.coeffs[t]);
      const int* e = p.exps.data() + t * nv;
      for (std::size_t v = 0; v < nv; ++v) {
        if (e[v] != 0) term = _mm256_mul_pd(term, pw[offset[v] + static_cast<std::size_t>(e[v])].v);
      }
      acc = _mm256_add_pd(acc, term);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (full == count) return;
  // Tail through the reference kernel on a compacted copy.
  const std::size_t rest = count - full;
  std::vector<double> tail(nv * rest);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < rest; ++i) tail[v * rest + i] = points[v * count + full + i];
  }
  eval_batch_scalar(p, tail.data(), rest, out + full);
}

}  // namespace reticular::kernels::detail
