#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reticular/jet_space.hpp"
#include "reticular/parse.hpp"
#include "reticular/poly.hpp"

using namespace reticular;

namespace {
CornerPoly P(const char* s, int r, int k, std::vector<std::string> params = {}) {
  return parse_poly(s, r, k, std::move(params));
}
}  // namespace

TEST_CASE("truncate keeps low degrees") {
  CHECK(truncate(P("x1^2 + x1^5", 1, 0), 3) == P("x1^2", 1, 0));
  CHECK(truncate(P("y1^3 + q1*y1", 0, 1, {"q1"}), 4) == P("y1^3 + q1*y1", 0, 1, {"q1"}));
  CHECK(truncate(P("3 + x1 + x1^6 + y1^2", 1, 1), 0) == P("3", 1, 1));
}

TEST_CASE("derivatives") {
  CHECK(derivative(P("y1^3 + q1*y1", 0, 1, {"q1"}), "y1") == P("3*y1^2 + q1", 0, 1, {"q1"}));
  CHECK(derivative(P("x1^2", 1, 0), "x1") == P("2*x1", 1, 0));
  CHECK(derivative(P("x1*y1 + y1^3", 1, 1), "y1") == P("x1 + 3*y1^2", 1, 1));
  CHECK_THROWS(derivative(P("x1", 1, 0), "y7"));
}

TEST_CASE("truncated multiplication") {
  CHECK(multiply(P("x1", 1, 0), P("x1^2", 1, 0), 10) == P("x1^3", 1, 0));
  CHECK(multiply(P("x1", 1, 0), P("x1^2", 1, 0), 2).is_zero());
  CHECK(multiply(P("1 + y1", 0, 1), P("1 - y1", 0, 1), 2) == P("1 - y1^2", 0, 1));
  CHECK_THROWS_AS(multiply(P("x1", 1, 0), P("y1", 0, 1), 3), ShapeError);
}

TEST_CASE("substitution") {
  const VarLayout L(0, 1, {"q1"});
  std::map<std::string, CornerPoly> zero{{"q1", CornerPoly(L)}};
  CHECK(substitute(P("y1^3 + q1*y1", 0, 1, {"q1"}), zero, 8) == P("y1^3", 0, 1, {"q1"}));
  std::map<std::string, CornerPoly> shift{{"x1", P("x1 + x1^2", 1, 0)}};
  CHECK(substitute(P("x1^2", 1, 0), shift, 3) == P("x1^2 + 2*x1^3", 1, 0));
  const VarLayout H(0, 0, {"Q1", "p1"});
  std::map<std::string, CornerPoly> q0{{"Q1", CornerPoly(H)}};
  CHECK(substitute(parse_poly("-Q1*p1 + p1^3", H), q0, 5) == parse_poly("p1^3", H));
  const CornerPoly f = P("x1^3*y1 - 2/3*y1^2 + 7", 1, 1);
  std::map<std::string, CornerPoly> ident{{"x1", P("x1", 1, 1)}, {"y1", P("y1", 1, 1)}};
  CHECK(substitute(f, ident, -1) == f);
}

TEST_CASE("jet space bases in graded order") {
  const JetSpace a = monomial_basis(1, 0, 3, 1);
  CHECK(a.dim() == 3);
  CHECK(a.monomial(0) == Exponent{1});
  CHECK(a.monomial(2) == Exponent{3});
  const JetSpace b = monomial_basis(1, 1, 2, 0);
  REQUIRE(b.dim() == 6);
  const std::vector<Exponent> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(b.monomial(i) == want[i]);
    CHECK(b.index(want[i]) == i);
  }
  CHECK(monomial_basis(0, 2, 1, 1).dim() == 2);
}

TEST_CASE("algebraic properties on random polynomials") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  const VarLayout L(1, 2, {"q1"});
  auto rnd = [&](int deg) {
    CornerPoly p(L);
    for (const auto& m : oracle::monomials(L.size(), 0, deg)) {
      if (rng() % 2) p.add_term(m, Rational(c(rng), 1 + static_cast<int>(rng() % 4)));
    }
    return p;
  };
  for (int t = 0; t < 20; ++t) {
    const CornerPoly a = rnd(3), b = rnd(3);
    CHECK(truncate(truncate(a, 3), 2) == truncate(a, 2));
    for (std::size_t v = 0; v < L.size(); ++v) {
      CHECK(derivative(multiply(a, b, 6), v) ==
            multiply(derivative(a, v), b, 6) + multiply(a, derivative(b, v), 6));
    }
    CHECK(multiply(a, b, -1) == a * b);
  }
}

TEST_CASE("formatting is canonical") {
  CHECK(format_poly(P("- y1^4 + 3/2*y1*q1", 0, 1, {"q1"})) == "3/2*y1*q1 - y1^4");
  CHECK(format_poly(P("0", 0, 1)) == "0");
  CHECK(format_poly(P("y1^3 + x1^2", 1, 1)) == "x1^2 + y1^3");
}
