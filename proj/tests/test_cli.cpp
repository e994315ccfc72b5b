// Copyright 2026 The corrwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"corrwork"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      corrwork::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "corrwork_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("number formatting") {
  using corrwork::cli::format_number;
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.69314718055994530942) == "0.693147181");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(36.80642071684970699) == "36.8064207");
  CHECK(format_number(1.5e-13) == "1.5e-13");
}

TEST_CASE("run quantum-full") {
  const auto r = invoke({"run", "--protocol", "quantum-full", "--n", "1", "--kT", "1"});
  CHECK(r.code == corrwork::cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(std::abs(doc["total_work"].get<double>() - 1.38629436) < 1e-8);
  CHECK(doc["equivalence"]["pass"] == true);
  CHECK(doc["ledger"].size() == 10);
  CHECK(doc["meta"]["command"] == "run");
}

TEST_CASE("run scales with the gas flags") {
  const auto r = invoke({"run", "--protocol", "classical-partial", "--p", "0.6", "--n", "50",
                         "--kT", "2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["total_work"].get<double>() - 2.01355136) < 1e-8);
  CHECK(std::abs(doc["total_work_nkt"].get<double>() - 0.0201355136) < 1e-10);

  const auto k_t = invoke({"run", "--protocol", "classical-full", "--k", "2", "--T", "3"});
  CHECK(k_t.code == 0);
  CHECK(std::abs(nlohmann::json::parse(k_t.out)["total_work"].get<double>() - 6 * 0.693147181) <
        1e-8);
}

TEST_CASE("run usage errors") {
  const auto missing = invoke({"run", "--protocol", "classical-partial"});
  CHECK(missing.code == corrwork::cli::kExitUsage);
  CHECK(missing.err.find("--p") != std::string::npos);
  CHECK(missing.out.empty());

  CHECK(invoke({"run", "--protocol", "classical-full", "--p", "0.7"}).code == 1);
  CHECK(invoke({"run", "--protocol", "bogus"}).code == 1);
  CHECK(invoke({"run"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"run", "--protocol", "classical-full", "--kT", "1", "--k", "2"}).code == 1);
  CHECK(invoke({"run", "--protocol", "classical-full", "--n", "-1"}).code == 1);
  CHECK(invoke({"run", "--protocol", "classical-full", "--quad-tol", "0"}).code == 1);
  CHECK(invoke({"run", "--protocol", "classical-partial", "--p", "1.2"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("run degenerate p") {
  const auto r = invoke({"run", "--protocol", "classical-partial", "--p", "0.5"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["total_work"].get<double>() == 0.0);
  CHECK(doc["degenerate"] == true);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("run csv ledger") {
  const auto r = invoke({"run", "--protocol", "classical-full", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "step,description,work_out,heat_in,gas_entropy_delta");
  CHECK(rows[4] == "3,quasistatic isothermal mixing,0.693147181,0.693147181,0.693147181");
}

TEST_CASE("sweep table") {
  const auto r = invoke({"sweep", "--protocol", "classical-partial", "--p-min", "0.5", "--p-max",
                         "1", "--steps", "5"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "p,work_numeric,work_closed,defect_nats,eq_displacement,rel_error");
  const auto mid = fields(rows[3]);
  CHECK(mid[0] == 0.75);
  CHECK(mid[2] == doctest::Approx(0.130812036).epsilon(1e-9));
  CHECK(mid[4] == doctest::Approx(0.5).epsilon(1e-9));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i])[5] <= 1e-6);
  const auto last = fields(rows[5]);
  CHECK(last[0] == 1.0);
  CHECK(last[2] == doctest::Approx(0.693147181).epsilon(1e-9));

  const auto q = invoke({"sweep", "--protocol", "quantum-partial", "--steps", "3"});
  const auto qrows = lines(q.out);
  REQUIRE(qrows.size() == 4);
  CHECK(fields(qrows[3])[2] == doctest::Approx(1.38629436).epsilon(1e-9));
}

TEST_CASE("sweep both protocols") {
  const auto r = invoke({"sweep", "--steps", "3"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "# classical-partial");
  CHECK(rows[5].empty());
  CHECK(rows[6] == "# quantum-partial");

  const auto base = scratch("both.csv");
  const auto files = invoke({"sweep", "--steps", "3", "--out", base.string().c_str()});
  CHECK(files.code == 0);
  CHECK(files.out.empty());
  const auto classical = slurp(base.parent_path() / "both.classical-partial.csv");
  const auto quantum = slurp(base.parent_path() / "both.quantum-partial.csv");
  CHECK(lines(classical).size() == 4);
  CHECK(lines(quantum).size() == 4);

  const auto json = invoke({"sweep", "--steps", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["tables"]["classical-partial"].size() == 3);
  CHECK(doc["tables"]["quantum-partial"][2]["work_closed"].get<double>() ==
        doctest::Approx(1.38629436).epsilon(1e-9));
}

TEST_CASE("sweep domain errors") {
  CHECK(invoke({"sweep", "--p-min", "0.4"}).code == 1);
  CHECK(invoke({"sweep", "--p-min", "0.8", "--p-max", "0.7"}).code == 1);
  CHECK(invoke({"sweep", "--steps", "1"}).code == 1);
  CHECK(invoke({"sweep", "--protocol", "quantum-full"}).code == 1);
}

TEST_CASE("sweep is deterministic") {
  const auto a = invoke({"sweep", "--steps", "7", "--n", "3"});
  const auto b = invoke({"sweep", "--steps", "7", "--n", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("report") {
  const auto r = invoke({"report"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["i_q_nats"].get<double>() - 1.386294361) < 1e-8);
  CHECK(std::abs(doc["i_c_nats"].get<double>() - 0.693147181) < 1e-8);
  CHECK(std::abs(doc["ratio_wq_over_wc"].get<double>() - 2.0) <= 1e-9);
  CHECK(doc["defect_equilibrium"].get<double>() == 0.0);
  CHECK(doc["pass"] == true);
  for (const auto& [key, value] : doc["checks"].items()) CHECK_MESSAGE(value == true, key);
}

TEST_CASE("output file errors") {
  const auto r = invoke({"report", "--out", "/nonexistent-dir/x/report.json"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

#ifdef CORRWORK_CLI_PATH
TEST_CASE("binary exit codes") {
  const std::string bin = CORRWORK_CLI_PATH;
  const auto quiet = " >/dev/null 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + quiet).c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("run --protocol quantum-full --n 1 --kT 1") == 0);
  CHECK(status("run --protocol classical-partial") == 1);
  CHECK(status("run --protocol classical-partial --p 0.5") == 0);
  CHECK(status("sweep --p-min 0.2") == 1);
  CHECK(status("report") == 0);
}
#endif
