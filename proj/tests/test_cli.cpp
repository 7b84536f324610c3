// Drives the installed CLI binary end to end. The binary path arrives in the
// RCL_CLI environment variable, set by the test harness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  const char* p = std::getenv("RCL_CLI");
  REQUIRE_MESSAGE(p != nullptr, "RCL_CLI must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("invariants of a catalog pair") {
  RunResult r = run("invariants catalog:metacyclic:9");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("cluster size r         1") != std::string::npos);
  CHECK(r.output.find("clusters s             9") != std::string::npos);
}

TEST_CASE("json output round-trips byte for byte") {
  RunResult r = run("invariants catalog:metacyclic:9 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j.dump(2) + "\n" == r.output);
  CHECK(j["r"] == 1);
  CHECK(j["s"] == 9);
}

TEST_CASE("tower with the ordering from the worked example") {
  RunResult r = run("tower catalog:metacyclic:9 --order 1,4,2,3,5,6,7,8,9 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["degree_sequence"] == Json::array({9, 18, 54}));
  CHECK(j["length"] == 4);
}

TEST_CASE("tower sweep lists both outcomes") {
  RunResult r = run("tower catalog:metacyclic:8 --all-orders --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["outcomes"].size() == 2);
}

TEST_CASE("ascending chain of the degree-12 radical pair") {
  RunResult r = run("chain --ascending catalog:metacyclic:12 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["t"] == 2);
  CHECK(j["step_indices"] == Json::array({2, 2}));
}

TEST_CASE("capacity with a stabilizer upper field") {
  RunResult r = run("capacity catalog:metacyclic:12 --upper stab:1,3 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["rho"] == 6);
  RunResult r2 = run("capacity catalog:metacyclic:12 --upper core --json");
  CHECK(Json::parse(r2.output)["rho"] == 12);
}

TEST_CASE("detect on a magnified catalog pair") {
  RunResult r = run("detect catalog:wreathlike:3:2+cyclic:2 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["found"] == true);
}

TEST_CASE("magnify reports before and after invariants") {
  RunResult r = run("magnify catalog:metacyclic:9 --by cyclic:3 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["before"]["r"] == 1);
  CHECK(j["after"]["r"] == 3);
  CHECK(j["after"]["s"] == 9);
}

TEST_CASE("basechange passes on a catalog pair") {
  RunResult r = run("basechange catalog:wreathlike:2:3 --by cyclic:5 --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["all"] == true);
}

TEST_CASE("catalog list and run") {
  RunResult list = run("catalog list --json");
  CHECK(list.exit_code == 0);
  CHECK(Json::parse(list.output)["fixtures"].size() >= 12);

  RunResult ok = run("catalog run nPk-5-2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[FAIL]") == std::string::npos);

  RunResult missing = run("catalog run no-such-fixture");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("verify accepts spec files and reports assertions") {
  // the symmetric group on 4 points with a point stabilizer
  std::string path = "cli_test_spec.json";
  {
    std::ofstream out(path);
    out << R"({"name":"s4-natural","degree":4,)"
        << R"("generators":[[2,1,3,4],[2,3,4,1]],)"
        << R"("subgroup":{"stabilizer_of":1}})";
  }
  RunResult r = run("verify " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
  CHECK(r.output.find("all assertions passed") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("spec files with subgroup generators work too") {
  std::string path = "cli_test_spec2.json";
  {
    std::ofstream out(path);
    out << R"({"degree":4,"generators":[[2,1,3,4],[2,3,4,1]],)"
        << R"("subgroup":{"generators":[[1,2,4,3]]}})";
  }
  RunResult r = run("invariants " + path + " --json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["n"] == 12);
  std::remove(path.c_str());
}

TEST_CASE("field-precise spec errors exit with the input code") {
  std::string path = "cli_test_bad.json";
  {
    std::ofstream out(path);
    out << R"({"degree":4,"generators":[[2,1,3]],"subgroup":{"stabilizer_of":1}})";
  }
  RunResult r = run("invariants " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("generators[0]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exit codes distinguish inputs from resource caps") {
  CHECK(run("invariants catalog:nosuch:3").exit_code == 2);
  CHECK(run("nosuchcommand catalog:metacyclic:9").exit_code == 2);
  CHECK(run("tower catalog:metacyclic:9").exit_code == 2);  // missing --order
  CHECK(run("--max-order 10 invariants catalog:metacyclic:9").exit_code == 3);
  CHECK(run("invariants catalog:tuples:8:6").exit_code == 3);  // degree cap
}

TEST_CASE("fixture names resolve as catalog specs") {
  RunResult r = run("invariants catalog:perlis-wreath-2-3 --json");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.output)["n"] == 6);
}
