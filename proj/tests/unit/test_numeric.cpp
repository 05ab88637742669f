#include <doctest.h>

#include <cmath>
#include <sstream>

#include "reticular/numeric_config.hpp"
#include "reticular/numeric_system.hpp"
#include "reticular/parse.hpp"

using namespace reticular;

TEST_CASE("batched Newton finds both roots of a cubic critical equation") {
  const VarLayout L(0, 1, {"q1"});
  const NumericSystem sys({parse_poly("3*y1^2 + q1", L)}, {L.y(1)});
  PointBatch b = PointBatch::from_points(L.size(), {{1.0, -0.75}, {-1.0, -0.75}, {0.5, 1.0}});
  const auto ok = sys.newton(b, {});
  CHECK(ok[0]);
  CHECK(ok[1]);
  CHECK_FALSE(ok[2]);
  CHECK(b.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.at(0, 1) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(b.at(1, 0) == -0.75);  // q is not an unknown
}

TEST_CASE("tangent of a solution curve") {
  const VarLayout L(0, 1, {"q1"});
  const NumericSystem sys({parse_poly("y1^2 + q1^2 - 1", L)}, {L.y(1), L.param(0)});
  const PointBatch b = PointBatch::from_points(L.size(), {{1.0, 0.0}});
  const auto t = sys.tangents(b);
  REQUIRE(t[0].size() == 2);
  CHECK(std::fabs(t[0][0]) < 1e-12);
  CHECK(std::fabs(std::fabs(t[0][1]) - 1) < 1e-12);
}

TEST_CASE("dense helpers") {
  std::vector<double> rhs{1, 2};
  CHECK(solve_dense({2, 0, 0, 4}, rhs, 2));
  CHECK(rhs[0] == doctest::Approx(0.5));
  CHECK(rhs[1] == doctest::Approx(0.5));
  CHECK(det_dense({1, 2, 3, 4}, 2) == doctest::Approx(-2));
  std::vector<double> step;
  CHECK(newton_step({1, 1}, {2}, 1, 2, step));
  CHECK(step[0] == doctest::Approx(1));
  CHECK(step[1] == doctest::Approx(1));
}

TEST_CASE("numeric config") {
  const NumericConfig c = NumericConfig::from_string("# tolerances\ntol_eq = 1e-10\nseeds_per_axis=5\nsimd=scalar\n");
  CHECK(c.tol_eq == 1e-10);
  CHECK(c.seeds_per_axis == 5);
  CHECK(c.simd == kernels::Backend::Scalar);
  CHECK_THROWS(NumericConfig::from_string("bogus=1"));
  CHECK_THROWS(NumericConfig::from_string("tol_eq=-1"));
  CHECK(parse_interval("-1:2") == std::pair<double, double>{-1, 2});
  CHECK(parse_interval("0.5") == std::pair<double, double>{-0.5, 0.5});
  CHECK_THROWS(parse_interval("2:1"));
}
