#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + RINGLAB_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

}  // namespace

TEST_CASE("check exit codes") {
  const Run yes = run("check Z36 --ideal 'gen(4)' --subset 'mulclosed(1,3,9,27)' --predicate s-j");
  CHECK(yes.code == 0);
  CHECK(has(yes, "true"));
  CHECK(has(yes, "3"));

  const Run no = run("check Z36 --ideal 'gen(4)' --subset 'mulclosed(1)' --predicate j");
  CHECK(no.code == 1);
  CHECK(has(no, "false"));
  CHECK(has(no, "(2, 2)"));

  CHECK(run("check Z36 --ideal 'gen(4)' --predicate s-j --mode per-pair --subset 'mulclosed(1,3,9,27)'").code == 0);
  CHECK(run("check 'M(2, Z2)' --ideal 'gen(0)' --subset 'mulclosed(1)' --predicate right-s-j --method elementwise")
            .code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  const Run syntax = run("describe 'M(2 Z12)'");
  CHECK(syntax.code == 2);
  CHECK(has(syntax, "column 5"));
  CHECK(run("describe 'idealize(Z12, 5)'").code == 2);
  CHECK(run("check Z6 --ideal 'gen(2)' --subset 'mulclosed(2,3)'").code == 2);
  CHECK(run("check Z36 --ideal 'gen(3)' --subset 'mulclosed(1,3,9,27)'").code == 2);
  CHECK(run("check Z36 --ideal 'gen(4)' --predicate maybe").code == 2);
  CHECK(run("verify --property P99 --max-size 10").code == 2);
}

TEST_CASE("capacity errors exit with 3") { CHECK(run("describe 'M(3, Z12)'").code == 3); }

TEST_CASE("describe and ideals") {
  const Run d = run("describe Z36");
  CHECK(d.code == 0);
  CHECK(has(d, "gen(6)"));
  const Run i = run("ideals 'Z2 x Z2'");
  CHECK(i.code == 0);
  CHECK(has(i, "gen((1,0))"));
  CHECK(has(i, "gen((0,1), (1,0))"));
}

TEST_CASE("reproduce") {
  const Run r = run("reproduce");
  CHECK(r.code == 0);
  for (const char* id : {"E1", "E2", "E3", "E4", "E5"}) CHECK(has(r, std::string(id) + "  pass"));
}

TEST_CASE("verify writes a JSON report") {
  const std::string config = "cli_test_config.json";
  const std::string report = "cli_test_report.json";
  std::ofstream(config) << R"({"families": ["zn"], "max_size": 12})";
  const Run v = run("verify --config " + config + " --property P1 --property P3 --json " + report);
  CHECK(v.code == 0);
  std::ifstream in(report);
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["summary"]["violations"] == 0);
  CHECK(j["summary"]["ok"] == true);
  CHECK(j["properties"].size() == 2);
  CHECK(run("verify --config missing_config.json").code == 2);
  std::ofstream(config) << R"({"max_sise": 12})";
  CHECK(run("verify --config " + config).code == 2);
  std::remove(config.c_str());
  std::remove(report.c_str());
}
