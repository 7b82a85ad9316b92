#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef INDIDEAL_CLI_PATH
#error "INDIDEAL_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(INDIDEAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("poly subcommand golden outputs") {
  CHECK(run_cli("poly --family path:3").out == "{\"coeffs\":[1,3,1],\"alpha\":2}\n");
  CHECK(run_cli("poly --family complete:4").out == "{\"coeffs\":[1,4],\"alpha\":1}\n");
  CHECK(run_cli("poly --family path:3").exit_code == 0);
}

TEST_CASE("poly: bad sources exit 2") {
  CHECK(run_cli("poly --edges missing.txt").exit_code == 2);
  CHECK(run_cli("poly --family nosuch:3").exit_code == 2);
  CHECK(run_cli("poly").exit_code == 2);  // a source is required
  CHECK(run_cli("poly --family path:3 --edges x.txt").exit_code == 2);
}

TEST_CASE("poly reads edge-list files") {
  std::string path = "cli_test_graph.txt";
  std::ofstream(path) << "# a 3-path\n3\n1 2\n2 3\n";
  auto r = run_cli("poly --edges " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"coeffs\":[1,3,1],\"alpha\":2}\n");
  std::remove(path.c_str());
}

TEST_CASE("generators subcommand golden outputs") {
  auto r = run_cli("generators --family path:2");
  CHECK(r.out ==
        "{\"generators\":[\"t1*t2\",\"s1*t2\",\"s2*t1\"],\"set_sizes\":[0,1,1]}\n");
  // P_2 and K_2 are the same graph
  CHECK(run_cli("generators --family complete:2").out == r.out);

  auto parsed = nlohmann::json::parse(run_cli("generators --family path:3").out);
  REQUIRE(parsed["generators"].size() == 5);
  CHECK(parsed["generators"][0] == "t1*t2*t3");
  CHECK(parsed["generators"][4] == "s1*s3*t2");
}

TEST_CASE("generators respects --max-gens with exit 3") {
  CHECK(run_cli("generators --family complete:2 --max-gens 2").exit_code == 3);
  CHECK(run_cli("generators --family complete:2 --max-gens 3").exit_code == 0);
}

TEST_CASE("invariants subcommand fields") {
  auto r = run_cli("invariants --family path:3");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["betti"] == nlohmann::json::array({5, 5, 1}));
  CHECK(parsed["projdim_quotient"] == 3);
  CHECK(parsed["regularity"] == 3);
  CHECK(parsed["krull_dim"] == 4);
  CHECK(parsed["cohen_macaulay"] == false);
  CHECK(parsed["dual_linear_resolution"] == false);

  auto complete = nlohmann::json::parse(run_cli("invariants --family complete:3").out);
  CHECK(complete["cohen_macaulay"] == true);
  CHECK(complete["projdim_quotient"] == 2);
  CHECK(complete["dual_linear_resolution"] == true);

  auto w1 = nlohmann::json::parse(run_cli("invariants --family centipede:1").out);
  CHECK(w1["regularity"] == 2);
  CHECK(w1["krull_dim"] == 2);
}

TEST_CASE("verify subcommand statuses and exit codes") {
  auto r = run_cli("verify --family path:3 --checks quotients,primdec,betti");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed["checks"].size() == 3);
  for (const auto& check : parsed["checks"]) CHECK(check["status"] == "pass");
  CHECK(parsed["all_passed"] == true);

  CHECK(run_cli("verify --family cycle:5 --checks quotients").exit_code == 0);

  auto dual = nlohmann::json::parse(run_cli("verify --family path:3 --checks dual").out);
  CHECK(dual["checks"][0]["status"] == "pass");

  // over the cap: skipped, still exit 0
  auto skipped = run_cli("verify --family path:7 --checks betti");
  CHECK(skipped.exit_code == 0);
  CHECK(nlohmann::json::parse(skipped.out)["checks"][0]["status"] == "skipped: over cap");

  CHECK(run_cli("verify --family path:3 --checks nosuch").exit_code == 2);
}

TEST_CASE("verify honors --max-verify-vertices and --threads") {
  auto r = run_cli(
      "verify --family path:6 --checks quotients,primdec --max-verify-vertices 6 --threads 2");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["checks"][0]["status"] == "pass");
  CHECK(parsed["checks"][1]["status"] == "pass");
}

TEST_CASE("identical invocations produce byte-identical stdout") {
  for (const std::string args :
       {std::string("poly --family cyclepow:10:2"),
        std::string("invariants --family cycle:4"),
        std::string("generators --family path:4")}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.out.find('{') == 0);
  }
}

TEST_CASE("coefficient vectors round-trip through the JSON output") {
  auto parsed = nlohmann::json::parse(run_cli("poly --family centipede:5").out);
  auto coeffs = parsed["coeffs"].get<std::vector<long long>>();
  REQUIRE(coeffs.size() == 6);
  CHECK(coeffs[0] == 1);
  CHECK(coeffs[1] == 10);  // 2n vertices
}

TEST_CASE("plain format is line-oriented") {
  auto r = run_cli("poly --family path:3 --format plain");
  CHECK(r.out == "coeffs: 1 3 1\nalpha: 2\n");
  auto inv = run_cli("invariants --family complete:2 --format plain");
  CHECK(inv.out.find("cohen_macaulay: true") != std::string::npos);
  auto ver = run_cli("verify --family path:3 --checks quotients --format plain");
  CHECK(ver.out.rfind("quotients: pass", 0) == 0);
}
