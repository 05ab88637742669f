#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = reticular::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json js(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("classify and codim examples") {
  const Result c = call({"classify", "x1^2+y1^3", "--r", "1", "--k", "1", "--mode", "R"});
  REQUIRE(c.code == 0);
  CHECK(js(c)["class"] == "F4+");
  CHECK(js(c)["codim"] == 3);
  CHECK(js(c)["determinacy"] == 3);
  const Result q = call({"codim", "y1^4", "--mode", "Rplus"});
  REQUIRE(q.code == 0);
  CHECK(js(q)["codim"] == 2);
  CHECK(js(q)["basis"] == nlohmann::json::array({"y1", "y1^2"}));
  const Result ns = call({"classify", "x1*y1", "--r", "1"});
  CHECK(ns.code == 0);
  CHECK(js(ns)["class"] == "NOT_SIMPLE");
  CHECK(js(call({"codim", "x1*y1", "--r", "1", "--mode", "Rplus"}))["codim"] == "INFINITE");
}

TEST_CASE("other subcommands") {
  CHECK(js(call({"determinacy", "x1^2+y1^3", "--r", "1", "--mode", "K"}))["determinacy"] == 3);
  CHECK(js(call({"determinacy", "x1^2+y1^3", "--mode", "K"}))["determinacy"] == 3);
  CHECK(js(call({"classify", "x1^2+y1^3"}))["class"] == "F4+");
  const Result u = call({"unfold", "x1*y1+y1^3", "--r", "1", "--mode", "K", "--legendrian"});
  REQUIRE(u.code == 0);
  CHECK(js(u)["params"] == nlohmann::json::array({"u1", "u2", "z"}));
  CHECK(js(call({"versal", "y1^4+q1*y1^2"}))["versal"] == false);
  CHECK(js(call({"versal", "y1^4+q1*y1^2+q2*y1"}))["versal"] == true);
  const Result s = call({"stability", "--catalog", "F4+"});
  CHECK(js(s)["stable"] == true);
  CHECK(js(s)["class"] == "F4+");
  CHECK(js(call({"stability", "--catalog", "C3+", "--legendrian"}))["class"] == "C3e+");
  const Result t = call({"classify", "y1^3", "--text"});
  CHECK(t.out.find("class:       A2") != std::string::npos);
}

TEST_CASE("catalog subcommands") {
  const Result l = call({"catalog", "list", "--r", "1", "--legendrian"});
  REQUIRE(l.code == 0);
  CHECK(l.out.rfind("key\tr\tkind\tn\tfamily\n", 0) == 0);
  CHECK(l.out.find("C4\t1\tLegendrian\t3\t") != std::string::npos);
  const Result g = call({"catalog", "get", "A2"});
  CHECK(js(g)["family"] == "y1*q1 + y1^3");
  CHECK(call({"catalog", "get", "nope"}).code == 2);
}

TEST_CASE("meshes") {
  const Result c = call({"caustic", "--catalog", "A3+", "--range=-1:1", "--res", "20"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("q1,q2,stratum\n", 0) == 0);
  const std::string path = "cli_test_mesh.obj";
  const Result w = call({"wavefront", "--catalog", "B2", "--range", "-1:1,-1:1", "--res", "10", "--out", path});
  REQUIRE(w.code == 0);
  CHECK(js(w)["strata"]["W_1"] > 0);
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  CHECK(first.rfind("# wavefront", 0) == 0);
  std::remove(path.c_str());
  CHECK(call({"caustic", "--catalog", "A2", "--range", "-1:1,-1:1"}).code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"caustic", "--catalog", "C3-", "--res", "15", "--range=-1:1"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("error exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"classify"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"classify", "y1^3", "--mode", "Q"}).code == 1);
  const Result p = call({"classify", "2y1"});
  CHECK(p.code == 2);
  CHECK(p.err.find("position") != std::string::npos);
  CHECK(call({"classify", "x1*x2", "--r", "2"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
