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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "logicint/cli/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Unitary spin evolution as phased sums over classical permutation gates"};
  app.set_version_flag("--version", std::string(logicint::cli::kToolName) + " " +
                                        std::string(logicint::cli::kToolVersion));
  app.require_subcommand(1);

  std::string run_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Run the task described by a config file");
  run->add_option("config", run_path, "Config file (YAML)")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output.directory)");
  run->add_option("--seed", seed, "Random seed (overrides task.seed)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and check a config file without running it");
  validate->add_option("config", validate_path, "Config file (YAML)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    std::optional<std::filesystem::path> out;
    if (out_dir) out = *out_dir;
    return logicint::cli::run_command(run_path, out, seed, std::cerr);
  }
  return logicint::cli::validate_command(validate_path, std::cerr);
}
