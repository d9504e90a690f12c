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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "logicint/cli/config.hpp"
#include "logicint/gate_algebra.hpp"

namespace logicint::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "logicint";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Complex numbers are {re, im} objects, matrices nested row arrays of them,
// gate sums lists of {image, re, im}.
Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);
Json gate_sum_to_json(const GateSum& gs);

Complex complex_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
GateSum gate_sum_from_json(const Json& j);

/// Normalized echo of the configuration.
Json config_to_json(const RunConfig& config);

struct RunOutput {
  Json report;
  /// sample_count,frobenius_error,stderr rows for mc tasks.
  std::optional<std::string> trace_csv;
};

/// Runs the configured task. Deterministic: identical configs give
/// byte-identical outputs.
RunOutput execute(const RunConfig& config);

/// Writes report.json (and trace.csv when present) into `dir`, creating it.
void write_outputs(const RunOutput& output, const std::filesystem::path& dir);

/// Exit status for an exception escaping a task: 2 parse, 3 contract, 4 size.
int exit_code_for(const std::exception& e);

/// `logicint run`: returns the process exit status.
int run_command(const std::filesystem::path& config_path, const std::optional<std::filesystem::path>& out_dir,
                const std::optional<std::uint64_t>& seed, std::ostream& log);

/// `logicint validate`: parse and check without running.
int validate_command(const std::filesystem::path& config_path, std::ostream& log);

}  // namespace logicint::cli
