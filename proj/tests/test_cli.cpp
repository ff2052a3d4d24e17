#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* path = std::getenv("TROPDIV_CLI");
  REQUIRE_MESSAGE(path != nullptr, "TROPDIV_CLI must point at the binary");
  return path;
}

RunResult run(const std::string& args) {
  RunResult result;
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("enumerate") {
  RunResult json = run("enumerate --alpha 1,0,0 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"N\": 5") != std::string::npos);

  RunResult table = run("enumerate --maximal 2 3");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("N = 14") != std::string::npos);

  RunResult csv = run("enumerate --alpha 1,0,0 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.substr(0, 14) == "key,shape,role");

  RunResult oracle = run("enumerate --alpha 1,0,0 --oracle --format csv");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output == csv.output);
}

TEST_CASE("count") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"count --maximal 1 3", "5 = 5 MATCH\n"},
      {"count --maximal 1 4", "12 = 12 MATCH\n"},
      {"count --maximal 2 3", "14 = 14 MATCH\n"},
  };
  for (const auto& [args, expected] : cases) {
    RunResult r = run(args);
    CAPTURE(args);
    CHECK(r.exit_code == 0);
    CHECK(r.output == expected);
  }
}

TEST_CASE("classgroup") {
  RunResult r = run("classgroup --alpha 1,0,0,0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"dimension\": 10") != std::string::npos);

  RunResult table = run("classgroup --alpha 1,0,0");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("dimension = 5") != std::string::npos);
  CHECK(table.output.find("FAIL") == std::string::npos);

  RunResult quadric = run("classgroup --alpha 2,0,0 --format json");
  CHECK(quadric.exit_code == 0);
  CHECK(quadric.output.find("\"dimension\": 14") != std::string::npos);
}

TEST_CASE("wdvv") {
  RunResult n4 = run("wdvv --n 4");
  CHECK(n4.exit_code == 0);
  CHECK(n4.output.find("3 divisors, 2 relations, rank 2, Picard dim 1") != std::string::npos);

  RunResult n6 = run("wdvv --n 6");
  CHECK(n6.exit_code == 0);
  CHECK(n6.output.find("25 divisors, 9 relations, rank 9") != std::string::npos);

  RunResult n3 = run("wdvv --n 3");
  CHECK(n3.exit_code == 0);
  CHECK(n3.output.find("0 divisors, 0 relations") != std::string::npos);

  RunResult csv = run("wdvv --n 5 --format csv --all-wdvv");
  CHECK(csv.exit_code == 0);
  // header + 2*C(5,4) relation rows
  CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 11);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("enumerate --alpha 0,0,0").exit_code == 2);
  CHECK(run("enumerate").exit_code == 2);
  CHECK(run("count --alpha 1,0,0").exit_code == 2);
  CHECK(run("wdvv --n 99").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
  for (const std::string& args :
       {std::string("enumerate --alpha 2,0,0 --format json"),
        std::string("classgroup --alpha 1,0,0,0 --format json")}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CAPTURE(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
  }
}

TEST_CASE("output file writing") {
  std::string path = "cli_out_test.json";
  RunResult r = run("enumerate --alpha 1,0,0 --format json --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::string contents((std::istreambuf_iterator<char>(file)),
                       std::istreambuf_iterator<char>());
  CHECK(contents.find("\"N\": 5") != std::string::npos);
  std::remove(path.c_str());
}
