// Copyright 2026 The logicint Authors
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

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "logicint/cli/config.hpp"
#include "logicint/cli/report.hpp"
#include "logicint/spin_system.hpp"

using namespace logicint;
using namespace logicint::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  static std::atomic<int> counter{0};
  auto dir = fs::temp_directory_path() / ("logicint_test_" + std::to_string(::getpid()) + "_" + name + "_" +
                                          std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kExact = R"(schema_version: 1
system:
  sites: 2
  bonds:
    - {sites: [0, 1], kind: exchange, coupling: 1.0}
task:
  kind: exact
  beta: 0.3
)";

const char* kMc = R"(schema_version: 1
system:
  sites: 2
  bonds:
    - {sites: [0, 1], kind: exchange, coupling: 1.0}
task:
  kind: mc
  beta: 0.3
  samples: 3000
  seed: 5
)";

}  // namespace

TEST_CASE("run: minimal exact config") {
  const auto dir = scratch_dir("exact");
  const auto cfg = write_file(dir, "run.yaml", kExact);
  std::ostringstream log;
  REQUIRE(run_command(cfg, dir / "out", std::nullopt, log) == 0);
  const auto report = Json::parse(slurp(dir / "out" / "report.json"));
  const auto u = matrix_from_json(report["results"]["matrix"]);
  CHECK(u.rows() == 4);
  ComplexMatrix e = exchange_gate(2, 0, 1).matrix();
  const ComplexMatrix closed = std::cos(0.3) * ComplexMatrix::Identity(4, 4) - Complex(0.0, std::sin(0.3)) * e;
  CHECK(frobenius_distance(u, closed) < 1e-13);
  CHECK(report["provenance"]["tool_version"] == std::string(kToolVersion));
  CHECK(report["inputs"]["task"]["kind"] == "exact");
  CHECK_FALSE(fs::exists(dir / "out" / "trace.csv"));
}

TEST_CASE("run: output stays inside the configured directory") {
  const auto dir = scratch_dir("confined");
  const auto cfg = write_file(dir, "run.yaml", std::string(kMc) + "output:\n  directory: results\n");
  std::ostringstream log;
  REQUIRE(run_command(cfg, std::nullopt, std::nullopt, log) == 0);
  std::set<std::string> top;
  for (const auto& e : fs::directory_iterator(dir)) top.insert(e.path().filename().string());
  CHECK(top == std::set<std::string>{"results", "run.yaml"});
  std::set<std::string> produced;
  for (const auto& e : fs::directory_iterator(dir / "results")) produced.insert(e.path().filename().string());
  CHECK(produced == std::set<std::string>{"report.json", "trace.csv"});
}

TEST_CASE("run: validation failures map to exit codes") {
  const auto dir = scratch_dir("errors");
  std::ostringstream log;

  const auto bad_site = write_file(dir, "bad.yaml", R"(schema_version: 1
system:
  sites: 3
  bonds:
    - {sites: [0, 1], kind: exchange}
    - {sites: [1, 5], kind: exchange}
task: {kind: exact, beta: 0.3}
)");
  CHECK(run_command(bad_site, dir / "o1", std::nullopt, log) == 3);
  CHECK(log.str().find("bond 1") != std::string::npos);
  CHECK(log.str().find("site 5") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "o1"));
  CHECK(validate_command(bad_site, log) == 3);

  log.str("");
  const auto syntax = write_file(dir, "syntax.yaml", "schema_version: 1\ntask:\n  kind: exact\n  beta: [0.3\n");
  CHECK(run_command(syntax, dir / "o2", std::nullopt, log) == 2);
  CHECK(log.str().find("line ") != std::string::npos);

  log.str("");
  const auto unknown = write_file(dir, "unknown.yaml", "schema_version: 1\ntask:\n  kind: exact\n  betta: 0.3\n");
  CHECK(run_command(unknown, dir / "o3", std::nullopt, log) == 2);
  CHECK(log.str().find("line 4") != std::string::npos);

  log.str("");
  const auto wrong_type = write_file(dir, "type.yaml", "schema_version: 1\ntask:\n  kind: exact\n  beta: fast\n");
  CHECK(run_command(wrong_type, dir / "o4", std::nullopt, log) == 2);
  CHECK(log.str().find("line 4") != std::string::npos);

  const auto version = write_file(dir, "version.yaml", "schema_version: 2\ntask: {kind: exact}\n");
  CHECK(run_command(version, dir / "o5", std::nullopt, log) == 2);
  CHECK(run_command(dir / "missing.yaml", dir / "o6", std::nullopt, log) == 2);

  const auto too_big = write_file(dir, "big.yaml", "schema_version: 1\nsystem: {sites: 13}\ntask: {kind: exact}\n");
  CHECK(run_command(too_big, dir / "o7", std::nullopt, log) == 4);
  CHECK(validate_command(too_big, log) == 4);

  const auto no_system = write_file(dir, "nosys.yaml", "schema_version: 1\ntask: {kind: series, beta: 0.1}\n");
  CHECK(run_command(no_system, dir / "o8", std::nullopt, log) == 3);

  const auto custom = write_file(dir, "custom.yaml", R"(schema_version: 1
system:
  sites: 1
  bonds:
    - sites: [0]
      kind: custom
      coupling: 1.0
      matrix: [[{re: 0.5, im: 0}, {re: 0, im: 0}], [{re: 0, im: 0}, {re: -0.5, im: 0}]]
task: {kind: series, beta: 0.1}
)");
  CHECK(validate_command(custom, log) == 0);
  CHECK(run_command(custom, dir / "o9", std::nullopt, log) == 3);  // not a permutation-algebra operator
}

TEST_CASE("run: identical seed gives byte-identical reports; --seed overrides") {
  const auto dir = scratch_dir("determinism");
  const auto cfg = write_file(dir, "mc.yaml", kMc);
  std::ostringstream log;
  REQUIRE(run_command(cfg, dir / "a", std::nullopt, log) == 0);
  REQUIRE(run_command(cfg, dir / "b", std::nullopt, log) == 0);
  CHECK(slurp(dir / "a" / "report.json") == slurp(dir / "b" / "report.json"));
  CHECK(slurp(dir / "a" / "trace.csv") == slurp(dir / "b" / "trace.csv"));

  REQUIRE(run_command(cfg, dir / "c", std::uint64_t{6}, log) == 0);
  CHECK(slurp(dir / "a" / "report.json") != slurp(dir / "c" / "report.json"));
  const auto report = Json::parse(slurp(dir / "c" / "report.json"));
  CHECK(report["provenance"]["seed"] == 6);
  CHECK(report["inputs"]["task"]["seed"] == 6);

  const auto trace = slurp(dir / "a" / "trace.csv");
  CHECK(trace.rfind("sample_count,frobenius_error,stderr\n", 0) == 0);
  CHECK(trace.find("\n1024,") != std::string::npos);
  CHECK(trace.find("\n2048,") != std::string::npos);
  CHECK(trace.find("\n3000,") != std::string::npos);
}

TEST_CASE("report: gate sums round-trip through JSON") {
  const auto dir = scratch_dir("series");
  const auto cfg = write_file(dir, "series.yaml", R"(schema_version: 1
system:
  sites: 3
  bonds:
    - {sites: [0, 1], kind: exchange, coupling: 1.0}
    - {sites: [1, 2], kind: antiferro, coupling: -0.4}
task: {kind: series, beta: 0.6, order: 14}
)");
  std::ostringstream log;
  REQUIRE(run_command(cfg, dir / "out", std::nullopt, log) == 0);
  const auto report = Json::parse(slurp(dir / "out" / "report.json"));
  const auto gs = gate_sum_from_json(report["results"]["gate_sum"]);
  const auto matrix = matrix_from_json(report["results"]["matrix"]);
  CHECK(frobenius_distance(render(gs), matrix) <= 1e-12);
  CHECK(report["results"]["distance_to_exact"].get<double>() <= report["results"]["frobenius_bound"].get<double>());
  for (const auto& term : report["results"]["gate_sum"]) {
    CHECK(term["image"].size() == 8);
    CHECK(term.contains("re"));
    CHECK(term.contains("im"));
  }
}

TEST_CASE("run: span, unit-modulus and Ising tasks") {
  const auto dir = scratch_dir("ising");
  std::ostringstream log;

  const auto span = write_file(dir, "span.yaml",
                               "schema_version: 1\ntask: {kind: span-test}\nmatrix: {source: ising-two-site, gamma: 0.3}\n");
  REQUIRE(run_command(span, dir / "span", std::nullopt, log) == 0);
  auto report = Json::parse(slurp(dir / "span" / "report.json"));
  CHECK(report["results"]["member"] == false);
  CHECK(report["results"]["common_sum"].is_null());
  CHECK(report["results"]["residual"].get<double>() > 0.05);

  const auto um = write_file(dir, "um.yaml",
                             "schema_version: 1\ntask: {kind: unit-modulus, max_support: 4}\nmatrix: {source: ising-two-site}\n");
  REQUIRE(run_command(um, dir / "um", std::nullopt, log) == 0);
  report = Json::parse(slurp(dir / "um" / "report.json"));
  CHECK(report["results"]["count"] == 2);
  CHECK(report["results"]["counts_by_support"]["3"] == 0);
  CHECK(report["results"]["counts_by_support"]["4"] == 2);
  CHECK(report["results"]["counts_by_support"]["5"] == 2);
  CHECK(report["results"]["counts_by_support"]["6"].get<std::size_t>() >= 2);
  for (const auto& d : report["results"]["decompositions"]) {
    CHECK(frobenius_distance(render(gate_sum_from_json(d)), matrix_from_json(report["results"]["matrix"])) < 1e-10);
  }

  const auto entries = write_file(dir, "entries.yaml", R"(schema_version: 1
task: {kind: span-test}
matrix:
  source: entries
  entries:
    - [{re: 1, im: 0}, {re: 2, im: 0}]
    - [{re: 2, im: 0}, {re: 1, im: 0}]
)");
  REQUIRE(run_command(entries, dir / "entries", std::nullopt, log) == 0);
  report = Json::parse(slurp(dir / "entries" / "report.json"));
  CHECK(report["results"]["member"] == true);
  CHECK(report["results"]["common_sum"]["re"] == 3.0);

  const auto unit = write_file(dir, "unit.yaml", R"(schema_version: 1
task: {kind: ising-unitarity}
ising: {sites: 3, coupling_time: {re: 0, im: 0.7853981633974483}, gamma: 2.1}
)");
  REQUIRE(run_command(unit, dir / "unit", std::nullopt, log) == 0);
  report = Json::parse(slurp(dir / "unit" / "report.json"));
  CHECK(report["results"]["unitarity_defect"].get<double>() < 1e-12);

  const auto part = write_file(dir, "part.yaml", R"(schema_version: 1
task: {kind: ising-partition, tau: 2}
ising: {sites: 2, coupling_time: {re: 0, im: 0}, coupling_space: {re: 0, im: 0}}
)");
  REQUIRE(run_command(part, dir / "part", std::nullopt, log) == 0);
  report = Json::parse(slurp(dir / "part" / "report.json"));
  CHECK(std::abs(report["results"]["ratio"]["re"].get<double>() - 4.0) < 1e-12);

  const auto too_many = write_file(dir, "many.yaml", R"(schema_version: 1
task: {kind: ising-partition, tau: 9}
ising: {sites: 3}
)");
  CHECK(run_command(too_many, dir / "many", std::nullopt, log) == 4);
}
