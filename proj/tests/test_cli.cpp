// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#ifndef CSB_CLI_PATH
#error "CSB_CLI_PATH must point at the csb binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(CSB_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

// Splits one CSV line into doubles.
std::vector<double> parse_row(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

TEST_CASE("single-point trace pins the header and the t = 0 row") {
  const auto r = run("trace --nb 1 --nc 2 --m 1 --tmax 0 --steps 1");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string header;
  std::string row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row));
  CHECK(header == "t,p0,p1,S,dE,erg");
  const auto vals = parse_row(row);
  REQUIRE(vals.size() == 6);
  const std::vector<double> expected{0, 1, 0, 0, 0, 0};
  for (size_t i = 0; i < vals.size(); ++i) {
    CHECK(std::abs(vals[i] - expected[i]) <= 1e-12);
  }
}

TEST_CASE("detuned one-cell trace tops out at the closed-form ergotropy") {
  // grid chosen so the charging time pi/(2 sqrt(22.25)) is a grid point
  const auto r = run("trace --nb 1 --nc 20 --m 20 --h 4 "
                     "--tmax 0.6660163105297472 --steps 2049");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string line;
  std::getline(in, line);
  double max_erg = 0.0;
  while (std::getline(in, line)) {
    const auto pos = line.rfind(',');
    max_erg = std::max(max_erg, std::stod(line.substr(pos + 1)));
  }
  CHECK(std::abs(max_erg - 71.0 / 89.0) <= 1e-6);
}

TEST_CASE("trace header names one column per ladder level") {
  const auto r = run("trace --nb 2 --nc 10 --m 6 --steps 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("t,p0,p1,p2,S,dE,erg\n", 0) == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string cmd = "trace --nb 2 --nc 10 --m 3 --steps 64";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("charge emits a fixed-order json summary") {
  const auto r = run("charge --nb 2 --nc 10 --m 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  const std::vector<std::string> expected_keys{
      "T", "dE_T", "erg_T", "S_T", "Ep_T", "populations_T", "objective",
      "window"};
  size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    REQUIRE(i < expected_keys.size());
    CHECK(it.key() == expected_keys[i]);
  }
  CHECK(i == expected_keys.size());
  CHECK(j["T"].get<double>() ==
        doctest::Approx(std::numbers::pi / std::sqrt(120.0)).epsilon(1e-7));
  CHECK(j["erg_T"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(j["S_T"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(j["objective"] == "de");
}

TEST_CASE("one-cell charge summary") {
  const auto r = run("charge --nb 1 --nc 2 --m 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["T"].get<double>() ==
        doctest::Approx(std::numbers::pi / (2.0 * std::sqrt(2.0)))
            .epsilon(1e-7));
  CHECK(j["erg_T"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sweep peaks at the half-filled charger") {
  const auto r = run("sweep --nb 2 --nc 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("m,T,erg_T,S_T,dE_T\n", 0) == 0);
  // 10 rows plus header
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 11);
  double best_erg = 0.0;
  int best_m = 0;
  std::istringstream in(r.output);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const int m = std::stoi(line.substr(0, c1));
    const double erg = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
    if (erg > best_erg) {
      best_erg = erg;
      best_m = m;
    }
  }
  CHECK(best_m == 6);
  CHECK(best_erg == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("sweep honors a single-m range") {
  const auto r = run("sweep --nb 2 --nc 10 --m-min 6 --m-max 6");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 2);
}

TEST_CASE("regimes emits both predictors") {
  const auto r = run("regimes --nb 2 --nc 10 --m-min 5 --m-max 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("m,T_measured,T_tc,T_ntc\n", 0) == 0);
}

TEST_CASE("regime predictor column is nan at full filling") {
  const auto r = run("regimes --nb 2 --nc 4 --m-min 4 --m-max 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("nan") != std::string::npos);
}

TEST_CASE("oracle check passes on small systems") {
  const auto r = run("oracle-check --nb 1 --nc 3 --m 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["pass"].get<bool>());
  CHECK(j["max_population_dev"].get<double>() <= 1e-9);
}

TEST_CASE("oracle check with Ising detuning") {
  const auto r = run("oracle-check --nb 2 --nc 4 --m 2 --delta 0.3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  CHECK(j["pass"].get<bool>());
}

TEST_CASE("exit codes") {
  SUBCASE("invalid parameters exit 2") {
    CHECK(run("trace --nb 1 --nc 2 --m 1 --B -1 --steps 4").exit_code == 2);
    CHECK(run("charge --nb 1 --nc 20 --m 21").exit_code == 2);
  }
  SUBCASE("no charging possible exits 4") {
    CHECK(run("charge --nb 1 --nc 2 --m 1 --A 0").exit_code == 4);
    const auto r = run("charge --nb 1 --nc 2 --m 1 --A 0", true);
    CHECK(r.output.find("NoChargingPossible") != std::string::npos);
  }
  SUBCASE("oracle size breach exits 2") {
    CHECK(run("oracle-check --nb 6 --nc 8 --m 4").exit_code == 2);
  }
  SUBCASE("unwritable output exits 3") {
    CHECK(run("trace --nb 1 --nc 2 --m 1 --steps 2 "
              "--out /nonexistent-dir/x.csv")
              .exit_code == 3);
  }
}

TEST_CASE("output lands in the requested file") {
  namespace fs = std::filesystem;
  const auto path = fs::temp_directory_path() / "csb_cli_test_trace.csv";
  const auto r =
      run("trace --nb 1 --nc 2 --m 1 --tmax 0 --steps 1 --out " + path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  const auto stdout_run = run("trace --nb 1 --nc 2 --m 1 --tmax 0 --steps 1");
  CHECK(contents == stdout_run.output);
  fs::remove(path);
}

TEST_CASE("json trace format") {
  const auto r = run("trace --nb 1 --nc 2 --m 1 --tmax 1 --steps 3 "
                     "--format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.output);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["t"].get<double>() == 0.0);
  CHECK(j[0]["p"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
