#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SHIFTARG_CLI_PATH
#error "SHIFTARG_CLI_PATH must point at the built binary"
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SHIFTARG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("diagram from declared block data infers n") {
  auto r = run("diagram --inline '{\"jordan\":[{\"eigenvalue\":\"0\",\"blocks\":[2,2,1,1]}]}'");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["gamma"] == Json::array({4, 2, 1}));
  CHECK(j["expected_rank"] == 14);
  CHECK(j["centralizer_dim"] == 20);
  CHECK(j["excluded"].size() == 7);
  CHECK(j["retained"].size() == 14);
}

TEST_CASE("diagram from a matrix") {
  auto r = run("diagram --inline '{\"n\":2,\"matrix\":[[\"2\",\"0\"],[\"0\",\"3\"]]}'");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gamma"] == Json::array());
  CHECK(j["expected_rank"] == 3);
  CHECK(j["centralizer_dim"] == 2);
}

TEST_CASE("generator listing") {
  auto r = run("generators --inline '{\"n\":1,\"matrix\":[[\"5\"]]}'");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["family"] == "phi");
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["m"] == 1);
  CHECK(j["entries"][0]["k"] == 0);
  CHECK(j["entries"][0]["element"] == "E[1,1]");
  CHECK(j["entries"][0]["symbol"] == "E[1,1]");
  CHECK(j["entries"][1]["k"] == 1);
  CHECK(j["entries"][1]["element"] == "5");
}

TEST_CASE("verification happy path") {
  auto r = run(
      "verify --inline '{\"n\":2,\"matrix\":[[\"2\",\"0\"],[\"0\",\"3\"]]}' "
      "--suites commutativity,rank,centralizer --seed 3");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["seed"] == 3);
  REQUIRE(j["reports"].size() == 3);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["failures"].empty());
    CHECK(rep["mu_digest"].get<std::string>().size() == 16);
    CHECK(rep["elapsed_ms"] == 0);
  }
}

TEST_CASE("negative control fails with a nonzero exit") {
  auto r = run(
      "verify --inline '{\"n\":2,\"matrix\":[[\"1\",\"0\"],[\"0\",\"-1\"]]}' "
      "--suites commutativity --negative-control");
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK_FALSE(j["reports"][0]["failures"].empty());
}

TEST_CASE("membership probe subcommand") {
  auto r = run("ss-check --n 2 --family phi");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 2);
  REQUIRE_FALSE(j["results"].empty());
  for (const auto& probe : j["results"]) CHECK(probe["ok"] == true);
}

TEST_CASE("output file and pretty mode") {
  std::string path = "cli_out_test.json";
  auto r = run("diagram --inline '{\"n\":2}' --pretty --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find('\n') != std::string::npos);  // indented
  Json j = Json::parse(ss.str());
  CHECK(j["n"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("errors surface as exit code 2") {
  CHECK(run("diagram --inline 'not json'").code == 2);
  CHECK(run("diagram --inline '{}'").code == 2);  // nothing pins n
  CHECK(run("generators --inline '{\"n\":2}' --family nope").code == 2);
  // non-split spectrum cannot produce a diagram
  CHECK(run("diagram --inline '{\"n\":2,\"matrix\":[[\"0\",\"-1\"],[\"1\",\"0\"]]}'").code == 2);
  // missing input entirely
  CHECK(run("diagram").code == 2);
}

TEST_CASE("usage errors come from the parser") {
  CHECK(run("frobnicate").code != 0);
  CHECK(run("").code != 0);  // a subcommand is required
}
