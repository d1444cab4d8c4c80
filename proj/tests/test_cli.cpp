#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef WITTPACK_CLI
#error "WITTPACK_CLI must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WITTPACK_CLI) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("tau-poly recovers the E7 constant") {
  RunResult r = run("tau-poly --case E7 --expect-paper");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("4x^10+x^7+2x^4+5x") != std::string::npos);
}

TEST_CASE("tau-poly F5 reports the computed polynomial") {
  // The reconstruction yields the negative of the built-in reference
  // constant (see the lift tests), so --expect-paper exits 1.
  RunResult r = run("tau-poly --case F5 --expect-paper");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("3x^9+2x") != std::string::npos);
  RunResult ok = run("tau-poly --case F5");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("tau-poly with a too-small sample extension") {
  RunResult r = run("tau-poly --case E7 --sample-ext 1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("abscissas") != std::string::npos);
}

TEST_CASE("packet command is verified") {
  RunResult r = run("packet --ext 2 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["unit_scalar"] == "5");
  CHECK(j["solutions"]["2"].size() == 6);
}

TEST_CASE("fermat command is verified") {
  RunResult r = run("fermat --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["solutions"]["1"].size() == 5);
}

TEST_CASE("orders lists the ten special points") {
  RunResult r = run("orders --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["special_points"].size() == 10);
  int threes = 0, twos = 0;
  for (const auto& p : j["special_points"]) {
    if (p["total_order"] == 3) ++threes;
    if (p["total_order"] == 2) ++twos;
  }
  CHECK(threes == 4);
  CHECK(twos == 6);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("tau-poly --case X9").exit_code == 2);
  CHECK(run("packet --bogus-flag").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  RunResult a = run("packet --json");
  RunResult b = run("packet --json");
  CHECK(a.out == b.out);
  CHECK(run("orders --json").out == run("orders --json").out);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "cli_test_report.json";
  RunResult r = run("orders --json --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  auto j = nlohmann::json::parse(f);
  CHECK(j["special_points"].size() == 10);
  std::remove(path.c_str());
}

TEST_CASE("config file supplies defaults, flags override") {
  std::string cfg = "cli_test_config.json";
  {
    std::ofstream f(cfg);
    f << R"({"ext": 1, "json": true})";
  }
  RunResult r = run("packet --config " + cfg);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["solutions"].size() == 1);  // config ext=1 applied

  RunResult r2 = run("packet --config " + cfg + " --ext 2");
  auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2["solutions"].size() == 2);  // flag wins
  std::remove(cfg.c_str());
}
