#include "reticular/kernels/poly_eval.hpp"

#include <algorithm>

namespace reticular::kernels {

CompiledPoly compile(const CornerPoly& p) {
  CompiledPoly c;
  c.nvars = p.nvars();
  c.max_exp.assign(c.nvars, 0);
  for (const auto& [e, v] : p.terms()) {
    c.coeffs.push_back(v.get_d());
    for (std::size_t i = 0; i < c.nvars; ++i) {
      c.exps.push_back(e[i]);
      c.max_exp[i] = std::max(c.max_exp[i], e[i]);
    }
  }
  return c;
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

Backend parse_backend(const std::string& s) {
  if (s == "auto") return Backend::Auto;
  if (s == "scalar") return Backend::Scalar;
  if (s == "avx2") return Backend::Avx2;
  if (s == "neon") return Backend::Neon;
  throw DomainError("unknown simd backend '" + s + "'");
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Auto:
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(RETICULAR_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(RETICULAR_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend resolve(Backend b) {
  if (b != Backend::Auto) {
    if (!backend_available(b)) throw DomainError("simd backend '" + to_string(b) + "' is not available");
    return b;
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

void eval_batch(const CompiledPoly& p, const double* points, std::size_t count, double* out, Backend backend) {
  switch (resolve(backend)) {
    case Backend::Avx2:
#if defined(RETICULAR_HAVE_AVX2_KERNEL)
      detail::eval_batch_avx2(p, points, count, out);
      return;
#else
      break;
#endif
    case Backend::Neon:
#if defined(RETICULAR_HAVE_NEON_KERNEL)
      detail::eval_batch_neon(p, points, count, out);
      return;
#else
      break;
#endif
    default: break;
  }
  detail::eval_batch_scalar(p, points, count, out);
}

}  // namespace reticular::kernels
