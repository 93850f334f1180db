#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

std::string binary_path() {
  const char* bin = std::getenv("SUBCOUNT_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "SUBCOUNT_BIN must point at the subcount binary");
  return bin;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("count command") {
  CHECK(run("count 2 2 2 2").out == "67\n");
  CHECK(run("count 2 2 2 2").exit_code == 0);
  CHECK(run("count 1 1 1 1").out == "1\n");
  CHECK(run("count 2 2 2 2 --order 4").out == "35\n");
  CHECK(run("count 30 30 30 30").out == "15908480\n");
  CHECK(run("count 6 6 6 6 --via direct").out ==
        run("count 6 6 6 6 --via primes").out);
  CHECK(run("count 4 9 25 8 --via direct").out ==
        run("count 4 9 25 8 --via primes").out);
  CHECK(run("count 12 10 6 4 --order 8 --via direct").out ==
        run("count 12 10 6 4 --order 8 --via primes").out);
}

TEST_CASE("count command rejects invalid input with exit 2") {
  CHECK(run("count 0 2 2 2").exit_code == 2);
  CHECK(run("count 2 2 2").exit_code == 2);
  CHECK(run("count 2 2 2 2 --order 3").exit_code == 2);
  CHECK(run("count 2 2 2 2 --order x").exit_code == 2);
  CHECK(run("count 2 2 2 2 --via magic").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("poly command") {
  CHECK(run("poly 1 1 1 1").out == "p^4 + 3*p^3 + 4*p^2 + 3*p + 5\n");
  CHECK(run("poly 0 0 0 0").out == "1\n");
  CHECK(run("poly 3 3 3 3 --order 6").out ==
        "p^12 + p^11 + 3*p^10 + 4*p^9 + 6*p^8 + 6*p^7 + 7*p^6 + 5*p^5 + "
        "4*p^4 + 3*p^3 + 2*p^2 + p + 1\n");
  CHECK(run("poly 1 1 1 1 --eval 2").out == "67\n");
  CHECK(run("poly 1 1 1 1 --eval 3").out == "212\n");
  CHECK(run("poly 1 1 1 1 --order 9").exit_code == 2);
  CHECK(run("poly 1 1 1 1 --eval 4").exit_code == 2);
  CHECK(run("poly 1 1 1 -1").exit_code == 2);
}

TEST_CASE("table command") {
  const auto result = run("table --max 5");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "1 1\n2 67\n3 212\n4 1983\n5 1120\n");

  const auto full = run("table");
  std::size_t lines = 0;
  for (char ch : full.out) lines += ch == '\n';
  CHECK(lines == 30);
  CHECK(full.out.find("10 75040\n") != std::string::npos);
  CHECK(full.out.find("24 9187868\n") != std::string::npos);
  CHECK(run("table --max 0").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const std::string args :
       {"count 2 2 2 2 --format json", "count 2 2 2 2 --order 4 --format json",
        "poly 1 1 1 1 --format json", "table --max 3 --format json",
        "conjectures --max-exp 1 --format json"}) {
    const auto result = run(args);
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(result.out);
    CHECK(parsed.dump() + "\n" == result.out);
  }
}

TEST_CASE("json record contents") {
  const auto count = nlohmann::ordered_json::parse(
      run("count 2 2 2 2 --order 4 --format json").out);
  CHECK(count["kind"] == "count");
  CHECK(count["value"] == "35");  // decimal string, never a number
  CHECK(count["inputs"]["m"] == 2);
  CHECK(count["inputs"]["k"] == "4");
  CHECK(count["meta"]["via"] == "primes");

  const auto poly =
      nlohmann::ordered_json::parse(run("poly 1 1 1 1 --format json").out);
  CHECK(poly["kind"] == "polynomial");
  CHECK(poly["value"] == nlohmann::ordered_json::array({5, 3, 4, 3, 1}));

  const auto table =
      nlohmann::ordered_json::parse(run("table --max 2 --format json").out);
  CHECK(table["kind"] == "table");
  CHECK(table["value"][1]["count"] == "67");

  const auto eval = nlohmann::ordered_json::parse(
      run("poly 1 1 1 1 --eval 2 --format json").out);
  CHECK(eval["kind"] == "count");
  CHECK(eval["value"] == "67");
}

TEST_CASE("verify command") {
  const auto small = run("verify --max-order 16");
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("agree") != std::string::npos);

  CHECK(run("verify").exit_code == 0);  // default bound 64
  CHECK(run("verify --max-order 1").exit_code == 0);

  const auto json_run = run("verify --max-order 12 --format json");
  CHECK(json_run.exit_code == 0);
  const auto parsed = nlohmann::ordered_json::parse(json_run.out);
  CHECK(parsed["value"] == "pass");
  CHECK(parsed["kind"] == "report");

  CHECK(run("verify --max-order 300").exit_code == 2);
  CHECK(run("verify --max-order 0").exit_code == 2);
}

TEST_CASE("conjectures command") {
  const auto result = run("conjectures --max-exp 3");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("FAIL") == std::string::npos);
  CHECK(result.out.find("all checks pass") != std::string::npos);
  CHECK(run("conjectures --max-exp 0").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("count --help").exit_code == 0);
}
