#include "singlat/cli.hpp"
#include "singlat/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = singlat::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

singlat::Json json_of(const Result& r) { return singlat::Json::parse(r.out); }

}  // namespace

TEST_CASE("check") {
  const Result a1 = run({"check", "--catalog", "A1"});
  CHECK(a1.code == 0);
  CHECK(a1.out.find("negative definite: yes\nrational\n") != std::string::npos);

  const Result flat = run({"check", "-"}, "vertex a euler=0\n");
  CHECK(flat.code == 2);
  CHECK(flat.out.find("negative definite: no") != std::string::npos);

  const Result j = run({"check", "--catalog", "cusp-3x3", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(json_of(j)["type"]["kind"] == "cusp");
}

TEST_CASE("input errors exit with 1") {
  CHECK(run({"check", "-"}, "vertex a euler=-2\nedge a b\n").code == 1);
  CHECK(run({"check", "-"}, "vertex a euler=-2\nedge a b\n").err.find("2:8") != std::string::npos);
  CHECK(run({"check", "--catalog", "nope"}).code == 1);
  CHECK(run({"check"}).code == 1);
  CHECK(run({"check", "/nonexistent/graph.sg"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"invariants", "--catalog", "A1", "--format", "yaml"}).code == 1);
  CHECK(run({"extend", "--catalog", "A1"}).code == 1);
  CHECK(run({"extend", "--catalog", "A1", "--vertex", "zz"}).code == 1);
  CHECK(run({"blowup", "--catalog", "A3", "--edge", "E1", "E3"}).code == 1);
}

TEST_CASE("invariants") {
  const Result r = run({"invariants", "--catalog", "paper-z7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["schema"] == "singlat/1");
  CHECK(j["command"] == "invariants");
  CHECK(j["graph"] == "paper-z7");
  CHECK(j["vertex_order"] == singlat::Json::parse(R"(["E1","E2","c","E3","E4","f"])"));
  CHECK(j["class_group"]["order"] == "7");
  CHECK(j["determinant"] == "7");

  const Result text = run({"invariants", "--catalog", "paper-z7"});
  CHECK(text.out.find("Z_min = (1, 2, 3, 2, 1, 2)") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
  for (const char* cmd : {"invariants", "sh", "classify", "special"}) {
    const Result a = run({cmd, "--catalog", "D5", "--format", "json"});
    const Result b = run({cmd, "--catalog", "D5", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("classify") {
  const Result gamma = run({"classify", "--catalog", "gamma-2-3-7"});
  CHECK(gamma.code == 0);
  CHECK(gamma.out.find("minimally-elliptic") != std::string::npos);
  CHECK(gamma.out.find("flat = zero-known") != std::string::npos);

  const Result other = run({"classify", "-"}, "vertex a euler=-1 genus=2\n");
  CHECK(other.code == 2);
  CHECK(other.err.find("precondition unmet") != std::string::npos);

  CHECK(run({"special", "--catalog", "cusp-3x3"}).code == 2);
  CHECK(run({"invariants", "-"}, "vertex a euler=1\n").code == 2);
}

TEST_CASE("graph transformations") {
  const Result ext = run({"extend", "--catalog", "paper-z7", "--vertex", "E1"});
  CHECK(ext.code == 0);
  CHECK(ext.out.find("edge E1 E1_e") != std::string::npos);

  const Result up = run({"blowup", "--catalog", "A1", "--vertex", "E1"});
  CHECK(up.code == 0);
  CHECK(up.out.find("vertex E_new euler=-1") != std::string::npos);

  CHECK(run({"catalog"}).out.find("paper-z7\n") != std::string::npos);
  CHECK(run({"catalog", "A2"}).out == "graph A2\nvertex E1 euler=-2\nvertex E2 euler=-2\nedge E1 E2\n");
}

TEST_CASE("verification") {
  const Result v = run({"verify", "--catalog", "A2"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("box factor B = 3", 0) == 0);

  CHECK(run({"verify", "--catalog", "A2", "--box", "2"}).out.rfind("box factor B = 2", 0) == 0);
  ::setenv("SINGLAT_BOX", "1", 1);
  CHECK(run({"verify", "--catalog", "A2"}).out.rfind("box factor B = 1", 0) == 0);
  CHECK(run({"verify", "--catalog", "A2", "--box", "4"}).out.rfind("box factor B = 4", 0) == 0);
  ::setenv("SINGLAT_BOX", "x", 1);
  CHECK(run({"verify", "--catalog", "A2"}).code == 1);
  ::unsetenv("SINGLAT_BOX");

  const Result with = run({"sh", "--catalog", "A3", "--verify"});
  CHECK(with.code == 0);
  CHECK(with.out.find("verification:\n") != std::string::npos);
  CHECK(run({"verify", "--catalog", "A20"}).code == 2);
}
