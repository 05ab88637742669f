#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reticular/poly.hpp"

namespace reticular::kernels {

// Double-precision copy of a polynomial for batched evaluation. Exponents
// are stored term-major: exps[t * nvars + v].
struct CompiledPoly {
  std::size_t nvars = 0;
  std::vector<double> coeffs;
  std::vector<int> exps;
  std::vector<int> max_exp;  // per variable

  std::size_t nterms() const { return coeffs.size(); }
};

CompiledPoly compile(const CornerPoly& p);

enum class Backend { Auto, Scalar, Avx2, Neon };

std::string to_string(Backend b);
Backend parse_backend(const std::string& s);
bool backend_available(Backend b);
// Auto resolves to the widest kernel the CPU supports.
Backend resolve(Backend b);

// points is variable-major: points[v * count + i]. out has count entries.
// Every backend performs the same operations in the same order.
void eval_batch(const CompiledPoly& p, const double* points, std::size_t count, double* out,
                Backend backend = Backend::Auto);

namespace detail {
void eval_batch_scalar(const CompiledPoly& p, const double* points, std::size_t count, double* out);
void eval_batch_avx2(const CompiledPoly& p, const double* points, std::size_t count, double* out);
void eval_batch_neon(const CompiledPoly& p, const double* points, std::size_t count, double* out);
}  // namespace detail

}  // namespace reticular::kernels
