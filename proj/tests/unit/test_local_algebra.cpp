#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reticular/local_algebra.hpp"
#include "reticular/parse.hpp"

using namespace reticular;

namespace {
CornerPoly P(const char* s, int r, int k) { return parse_poly(s, r, k); }

std::vector<std::string> basis(const char* s, int r, int k, Mode m) {
  return codimension(P(s, r, k), m).basis_strings();
}
}  // namespace

TEST_CASE("tangent module spans") {
  for (const char* f : {"x1^2", "-x1^2"}) {
    const TangentModule T = tangent_module(P(f, 1, 0), Mode::R, 3);
    CHECK(T.span.rank() == 2);
    CHECK(membership(P("x1^2", 1, 0), T, {}) == Tri::True);
    CHECK(membership(P("x1^3", 1, 0), T, {}) == Tri::True);
    CHECK(membership(P("x1", 1, 0), T, {}) == Tri::False);
  }
  const TangentModule C = tangent_module(P("x1*y1 + y1^3", 1, 1), Mode::R, 3);
  CHECK(membership(P("x1 + 3*y1^2", 1, 1), C, {}) == Tri::True);
  CHECK(membership(P("y1^3", 1, 1), C, {}) == Tri::True);
  const TangentModule K = tangent_module(P("y1^2", 0, 1), Mode::K, 2);
  CHECK(K.space.dim() - K.span.rank() == 1);
  CHECK_THROWS(tangent_module(P("1 + y1^2", 0, 1), Mode::R, 3));
}

TEST_CASE("codimension examples") {
  CHECK(codimension(P("x1^2", 1, 0), Mode::Rplus).codim == 1);
  CHECK(basis("-x1^2", 1, 0, Mode::Rplus) == std::vector<std::string>{"x1"});
  CHECK(codimension(P("y1^2", 0, 1), Mode::Rplus).codim == 0);
  CHECK(basis("x1^2 + y1^3", 1, 1, Mode::Rplus) == std::vector<std::string>{"x1", "y1", "x1*y1"});
  CHECK(basis("x1*y1 + y1^3", 1, 1, Mode::K) == std::vector<std::string>{"1", "y1", "y1^2"});
  CHECK(basis("y1^4", 0, 1, Mode::Rplus) == std::vector<std::string>{"y1", "y1^2"});
  const QuotientReport inf = codimension(P("x1*y1", 1, 1), Mode::Rplus);
  CHECK(inf.infinite);
  CHECK(inf.codim == -1);
  CHECK_THROWS(codimension(P("y1", 0, 1), Mode::Rplus));
}

TEST_CASE("codimension of x^l and its determinacy") {
  for (int l = 2; l <= 6; ++l) {
    const CornerPoly f = parse_poly("x1^" + std::to_string(l), 1, 0);
    CHECK(codimension(f, Mode::Rplus).codim == l - 1);
    CHECK(determinacy_bound(f, Mode::R) == l);
  }
}

TEST_CASE("determinacy examples agree with the dense oracle") {
  CHECK(determinacy_bound(P("x1^3", 1, 0), Mode::R) == 3);
  CHECK(determinacy_bound(P("y1^2", 0, 1), Mode::R) == 2);
  CHECK(determinacy_bound(P("x1^2 + y1^3", 1, 1), Mode::K) == 3);
  for (const char* s : {"y1^3", "y1^5", "x1*y1 + y1^3"}) {
    const int r = s[0] == 'x' ? 1 : 0;
    const CornerPoly f = P(s, r, 1);
    const auto d = determinacy_bound(f, Mode::R, 8);
    CHECK(d.value_or(-1) == oracle::determinacy(f, 'R', 8));
  }
}

TEST_CASE("membership with extras") {
  const TangentModule T = tangent_module(P("y1^3", 0, 1), Mode::R, 4);
  const CornerPoly one = P("1", 0, 1), y = P("y1", 0, 1);
  CHECK(membership(y, T, {one, y}) == Tri::True);
  CHECK(membership(y, T, {one}) == Tri::False);
  CHECK(membership(P("y1^6", 0, 1), T, {}) == Tri::Indeterminate);
  const TangentModule X = tangent_module(P("x1^2", 1, 0), Mode::R, 4);
  CHECK(membership(P("x1^2", 1, 0), X, {}) == Tri::True);
}

TEST_CASE("codimension invariant under linear changes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  const CornerPoly f = P("y1^2*y2 + y2^4", 0, 2);
  const int want = codimension(f, Mode::Rplus).codim;
  for (int t = 0; t < 10; ++t) {
    const VarLayout L = f.layout();
    int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
    if (a * e - b * d == 0) a += 1, e += (a * e - b * d == 0) ? 1 : 0;
    if (a * e - b * d == 0) continue;
    std::vector<CornerPoly> img{CornerPoly::variable(L, 0) * Rational(a) + CornerPoly::variable(L, 1) * Rational(b),
                                CornerPoly::variable(L, 0) * Rational(d) + CornerPoly::variable(L, 1) * Rational(e)};
    CHECK(codimension(compose(f, img, -1), Mode::Rplus).codim == want);
  }
  const CornerPoly g = P("x1^3 + x1*y1^2", 1, 1);
  std::vector<CornerPoly> img{CornerPoly::variable(g.layout(), 0) * Rational(5, 2), CornerPoly::variable(g.layout(), 1)};
  CHECK(codimension(compose(g, img, -1), Mode::K).codim == codimension(g, Mode::K).codim);
}

TEST_CASE("high-order perturbations do not change the codimension") {
  const CornerPoly f = P("y1^4", 0, 1);
  const int d = *determinacy_bound(f, Mode::R);
  const CornerPoly g = f + parse_poly("y1^" + std::to_string(d + 1), 0, 1);
  CHECK(codimension(g, Mode::Rplus).codim == codimension(f, Mode::Rplus).codim);
}

TEST_CASE("quotient size matches rank-nullity of the dense oracle") {
  for (const char* s : {"y1^2*y2 + y2^3", "y1^3 + y2^4", "y1^2*y2 - y2^5"}) {
    const CornerPoly f = P(s, 0, 2);
    const QuotientReport q = codimension(f, Mode::R);
    CHECK(q.codim == static_cast<int>(oracle::codim_at(f, 'R', q.l_used)));
  }
}
