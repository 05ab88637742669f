#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "reticular/catalog.hpp"
#include "reticular/discriminant.hpp"
#include "reticular/mesh_export.hpp"
#include "reticular/parse.hpp"

using namespace reticular;

namespace {
std::vector<std::vector<double>> coords(const DiscriminantMesh& m, const std::string& s = "") {
  std::vector<std::vector<double>> out;
  for (const auto& p : m.points) {
    if (s.empty() || p.stratum == s) out.push_back(p.coords);
  }
  return out;
}
}  // namespace

TEST_CASE("A2 caustic is the fold point") {
  const auto& e = catalog_get("A2", Kind::Lagrangian);
  const auto m = caustic(e.family, Region{{-1, 1}}, 50);
  REQUIRE(m.points.size() == 1);
  CHECK(std::fabs(m.points[0].coords[0]) < 1e-9);
  CHECK(m.points[0].stratum == "C_empty");
}

TEST_CASE("A3 cusp at low resolution and its points satisfy the equations") {
  const auto& e = catalog_get("A3+", Kind::Lagrangian);
  const Region box{{-1, 1}, {-1, 1}};
  const auto m = caustic(e.family, box, 40);
  REQUIRE(!m.points.empty());
  for (const auto& p : m.points) {
    // On the cusp: 27 q2^2 = -8 q1^3.
    CHECK(std::fabs(27 * p.coords[1] * p.coords[1] + 8 * p.coords[0] * p.coords[0] * p.coords[0]) < 1e-6);
  }
  const auto exact = oracle::sample_curve([](double t) { return std::vector<double>{-6 * t * t, 8 * t * t * t}; },
                                          -0.6, 0.6, 20000, box);
  CHECK(oracle::hausdorff(coords(m), exact) < 2e-3);
}

TEST_CASE("stable equivalence does not move the caustic") {
  const auto a = caustic(GeneratingFamily(parse_poly("y1^4 + q1*y1^2 + q2*y1", 0, 1, {"q1", "q2"}),
                                          Kind::Lagrangian),
                         Region{{-1, 1}, {-1, 1}}, 30);
  const auto b = caustic(GeneratingFamily(parse_poly("y1^4 + q1*y1^2 + q2*y1 - y2^2", 0, 2, {"q1", "q2"}),
                                          Kind::Lagrangian),
                         Region{{-1, 1}, {-1, 1}}, 30);
  CHECK(oracle::hausdorff(coords(a), coords(b)) < 1e-6);
}

TEST_CASE("B2 caustic and A1 caustic") {
  const auto m = caustic(catalog_get("B2-", Kind::Lagrangian).family, Region{{-1, 1}}, 20);
  REQUIRE(m.points.size() == 1);
  CHECK(m.points[0].stratum == "Q_empty_1");
  CHECK(std::fabs(m.points[0].coords[0]) < 1e-9);
  const auto a1 = caustic(GeneratingFamily(parse_poly("y1^2 + q1*y1", 0, 1, {"q1"}), Kind::Lagrangian),
                          Region{{-1, 1}}, 20);
  CHECK(a1.points.empty());
  CHECK_THROWS_AS(caustic(GeneratingFamily(parse_poly("y1^3", 0, 1), Kind::Lagrangian), Region{}, 10), DomainError);
  CHECK_THROWS_AS(caustic(catalog_get("A2", Kind::Lagrangian).family, Region{{1, -1}}, 10), DomainError);
  CHECK_THROWS_AS(caustic(catalog_get("A2", Kind::Lagrangian).family, Region{{-1, 1}}, 0), DomainError);
}

TEST_CASE("wavefronts") {
  const auto a1 = wavefront(catalog_get("A1", Kind::Legendrian).family, Region{}, 10);
  REQUIRE(a1.points.size() == 1);
  CHECK(std::fabs(a1.points[0].coords[0]) < 1e-9);
  const auto b2 = wavefront(catalog_get("B2", Kind::Legendrian).family, Region{{-1, 1}, {-1, 1}}, 40);
  for (const auto& p : b2.points) {
    if (p.stratum == "W_1") CHECK(std::fabs(p.coords[1]) < 1e-9);
    else CHECK(std::fabs(p.coords[1] - p.coords[0] * p.coords[0] / 4) < 1e-9);
    if (p.stratum == "W_empty") CHECK(p.coords[0] <= 1e-9);
  }
  CHECK(b2.count("W_1") > 0);
  CHECK(b2.count("W_empty") > 0);
}

TEST_CASE("mesh output is deterministic across thread counts") {
  const auto& e = catalog_get("C3+", Kind::Lagrangian);
  NumericConfig one, four;
  one.threads = 1;
  four.threads = 4;
  std::ostringstream a, b;
  write_mesh(caustic(e.family, Region{{-1, 1}, {-1, 1}}, 20, one), MeshFormat::Csv, a);
  write_mesh(caustic(e.family, Region{{-1, 1}, {-1, 1}}, 20, four), MeshFormat::Csv, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("mesh export formats") {
  DiscriminantMesh empty;
  empty.coord_names = {"q1", "q2"};
  std::ostringstream csv;
  write_mesh(empty, MeshFormat::Csv, csv);
  CHECK(csv.str() == "q1,q2,stratum\n");
  std::ostringstream obj;
  CHECK_THROWS(write_mesh(empty, MeshFormat::Obj, obj));

  const auto m = caustic(catalog_get("A3+", Kind::Lagrangian).family, Region{{-1, 1}, {-1, 1}}, 10);
  std::ostringstream out;
  write_mesh(m, MeshFormat::Csv, out);
  CHECK(out.str().rfind("q1,q2,stratum\n", 0) == 0);
  std::ostringstream ply;
  write_mesh(m, MeshFormat::Ply, ply);
  CHECK(ply.str().find("element vertex " + std::to_string(m.points.size())) != std::string::npos);
  CHECK(parse_mesh_format("obj") == MeshFormat::Obj);
  CHECK(mesh_format_for_path("a/b.ply") == MeshFormat::Ply);
  CHECK_THROWS(parse_mesh_format("stl"));
}
