#include <doctest.h>

#include "reticular/parse.hpp"

using namespace reticular;

TEST_CASE("parses the grammar") {
  const CornerPoly f = parse_poly("x1^2 + y1^3", 1, 1);
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient({2, 0}) == 1);
  CHECK(f.coefficient({0, 3}) == 1);
  CHECK(parse_poly("0", 0, 1).is_zero());
  const CornerPoly g = parse_poly("3/2*y1*q1 - y1^4", 0, 1, {"q1"});
  CHECK(g.coefficient({1, 1}) == Rational(3, 2));
  CHECK(g.coefficient({4, 0}) == -1);
  CHECK(parse_poly("(y1 + 1)^2 - 1", 0, 1) == parse_poly("y1^2 + 2*y1", 0, 1));
  CHECK(parse_poly("  - - y1 ", 0, 1) == parse_poly("y1", 0, 1));
}

TEST_CASE("round trip through the formatter") {
  for (const char* s : {"x1^2 + y1^3", "3/2*y1*q1 - y1^4", "x1*y1 + y1^3 + q1*y1^2 + q2*y1 + z", "0", "-7/3"}) {
    const VarLayout L(1, 1, {"q1", "q2", "z"});
    const CornerPoly p = parse_poly(s, L);
    CHECK(parse_poly(format_poly(p), L) == p);
  }
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_AS(parse_poly("2x1", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_poly("y1^-2", 0, 1), ParseError);
  CHECK_THROWS_AS(parse_poly("y2", 0, 1), ParseError);
  CHECK_THROWS_AS(parse_poly("y1 +", 0, 1), ParseError);
  CHECK_THROWS_AS(parse_poly("y1/y1", 0, 1), ParseError);
  try {
    parse_poly("y1 + w", 0, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}
