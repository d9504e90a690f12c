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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logicint/errors.hpp"
#include "logicint/ising_transfer.hpp"
#include "logicint/operator_core.hpp"
#include "logicint/spin_system.hpp"

namespace logicint::cli {

inline constexpr int kSchemaVersion = 1;

/// Malformed or unreadable configuration. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class TaskKind { exact, series, mc, span_test, unit_modulus, ising_unitarity, ising_partition };

std::string_view to_string(TaskKind kind);

struct SystemSpec {
  std::size_t sites = 0;
  std::vector<Bond> bonds;
};

/// Where span-test and unit-modulus tasks take their matrix from.
struct MatrixSpec {
  enum class Source { ising_two_site, entries, exact };
  Source source = Source::ising_two_site;
  /// ising_two_site: 2 * T for two sites at time coupling -i pi/4 and space
  /// coupling i * gamma.
  double gamma = 0.0;
  ComplexMatrix entries;
};

struct IsingSpec {
  std::size_t sites = 2;
  Complex coupling_time = kUnitaryTimeCoupling;
  /// Defaults to i * gamma when absent.
  std::optional<Complex> coupling_space;
  double gamma = 0.0;

  IsingCouplings couplings() const;
};

struct TaskParams {
  double beta = 0.0;
  std::size_t order = 12;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t tau = 1;
  std::size_t max_support = 4;
  /// Sample counts at which mc traces are recorded; empty selects doubling
  /// from 1024.
  std::vector<std::size_t> checkpoints;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  std::optional<SystemSpec> system;
  TaskKind task = TaskKind::exact;
  TaskParams params;
  std::optional<MatrixSpec> matrix;
  IsingSpec ising;
  std::filesystem::path output_dir = "out";
};

/// Parses YAML text. Relative output paths are kept as written.
RunConfig parse_config_text(std::string_view text);

/// Reads and parses a config file; a relative output directory is resolved
/// against the config file's directory.
RunConfig load_config(const std::filesystem::path& path);

/// Checks every cross-field requirement of the selected task and constructs
/// the bond system, so failures surface before any work starts.
void validate_config(const RunConfig& config);

/// Bond system described by the config (throws if absent or invalid).
BondSystem build_system(const RunConfig& config);

}  // namespace logicint::cli
