#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "oracles.hpp"
#include "reticular/kernels/poly_eval.hpp"
#include "reticular/parse.hpp"

using namespace reticular;
using namespace reticular::kernels;

namespace {
std::vector<double> run(const CompiledPoly& p, const std::vector<double>& pts, std::size_t n, Backend b) {
  std::vector<double> out(n);
  eval_batch(p, pts.data(), n, out.data(), b);
  return out;
}
}  // namespace

TEST_CASE("scalar kernel matches exact evaluation") {
  const CornerPoly f = parse_poly("x1^2*y1 - 3/2*y1^4 + q1*x1 + 7", 1, 1, {"q1"});
  const CompiledPoly c = compile(f);
  const std::vector<double> pts{0.5, -1.0, 2.0, 0.25, 3.0, -0.5};  // variable-major, 2 points
  const auto out = run(c, pts, 2, Backend::Scalar);
  CHECK(out[0] == doctest::Approx(f.evaluate_double(std::vector<double>{0.5, 2.0, 3.0})));
  CHECK(out[1] == doctest::Approx(f.evaluate_double(std::vector<double>{-1.0, 0.25, -0.5})));
}

TEST_CASE("every available SIMD kernel is bit-identical to the scalar kernel") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-2, 2);
  const VarLayout L(1, 2, {"q1", "q2"});
  for (int t = 0; t < 20; ++t) {
    CornerPoly f(L);
    for (const auto& m : oracle::monomials(L.size(), 0, 5)) {
      if (rng() % 5 == 0) f.add_term(m, Rational(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 5)));
    }
    const CompiledPoly c = compile(f);
    for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u}) {
      std::vector<double> pts(L.size() * n);
      for (double& v : pts) v = u(rng);
      const auto ref = run(c, pts, n, Backend::Scalar);
      for (Backend b : {Backend::Avx2, Backend::Neon, Backend::Auto}) {
        if (!backend_available(b)) continue;
        CAPTURE(to_string(b));
        const auto got = run(c, pts, n, b);
        CHECK(std::memcmp(ref.data(), got.data(), n * sizeof(double)) == 0);
      }
    }
  }
}

TEST_CASE("backend selection") {
  CHECK(parse_backend("scalar") == Backend::Scalar);
  CHECK_THROWS(parse_backend("sse"));
  CHECK(backend_available(Backend::Scalar));
  CHECK(resolve(Backend::Auto) != Backend::Auto);
  const CompiledPoly zero = compile(parse_poly("0", 0, 1));
  std::vector<double> pts{1.0}, out{5.0};
  eval_batch(zero, pts.data(), 1, out.data(), Backend::Auto);
  CHECK(out[0] == 0.0);
}
