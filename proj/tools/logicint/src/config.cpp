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

#include "logicint/cli/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace logicint::cli {
namespace {

std::size_t line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line < 0 ? 0 : static_cast<std::size_t>(mark.line) + 1;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) { throw ParseError(message, line_of(node)); }

void require_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
}

void allow_keys(const YAML::Node& node, const std::string& what, std::initializer_list<std::string_view> keys) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) fail(kv.first, "unknown key '" + key + "' in " + what);
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, what + " has the wrong type");
  }
}

std::size_t count(const YAML::Node& node, const std::string& what) {
  const auto v = scalar<long long>(node, what);
  if (v < 0) fail(node, what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

Complex complex_value(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap() || !node["re"] || !node["im"]) fail(node, what + " must be a {re, im} pair");
  allow_keys(node, what, {"re", "im"});
  return {scalar<double>(node["re"], what + ".re"), scalar<double>(node["im"], what + ".im")};
}

ComplexMatrix complex_matrix(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence() || node.size() == 0) fail(node, what + " must be a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(node.size());
  Eigen::Index cols = -1;
  ComplexMatrix m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row = node[static_cast<std::size_t>(i)];
    if (!row.IsSequence()) fail(row, what + " rows must be lists");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      if (cols == 0) fail(row, what + " rows must be non-empty");
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(row, what + " rows differ in length");
    }
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_value(row[static_cast<std::size_t>(j)], what + " entry");
  }
  return m;
}

TaskKind task_kind(const YAML::Node& node) {
  const auto name = scalar<std::string>(node, "task.kind");
  for (auto k : {TaskKind::exact, TaskKind::series, TaskKind::mc, TaskKind::span_test, TaskKind::unit_modulus,
                 TaskKind::ising_unitarity, TaskKind::ising_partition}) {
    if (name == to_string(k)) return k;
  }
  fail(node, "unknown task kind '" + name + "'");
}

SystemSpec parse_system(const YAML::Node& node) {
  require_map(node, "system");
  allow_keys(node, "system", {"sites", "bonds"});
  if (!node["sites"]) fail(node, "system.sites is required");
  SystemSpec spec;
  spec.sites = count(node["sites"], "system.sites");
  if (const auto bonds = node["bonds"]) {
    if (!bonds.IsSequence()) fail(bonds, "system.bonds must be a list");
    for (const auto& b : bonds) {
      require_map(b, "bond");
      allow_keys(b, "bond", {"sites", "kind", "coupling", "matrix"});
      if (!b["sites"] || !b["sites"].IsSequence()) fail(b, "bond.sites must be a list");
      Bond bond;
      for (const auto& s : b["sites"]) bond.sites.push_back(count(s, "bond site"));
      bond.coupling = b["coupling"] ? scalar<double>(b["coupling"], "bond.coupling") : 1.0;
      if (b["kind"]) {
        const auto kind = scalar<std::string>(b["kind"], "bond.kind");
        try {
          bond.kind = bond_kind_from_string(kind);
        } catch (const ArgumentError& e) {
          fail(b["kind"], e.what());
        }
      }
      if (bond.kind == BondKind::custom) {
        if (!b["matrix"]) fail(b, "custom bonds need a matrix");
        bond.custom = complex_matrix(b["matrix"], "bond.matrix");
      } else if (b["matrix"]) {
        fail(b["matrix"], "only custom bonds take a matrix");
      }
      spec.bonds.push_back(std::move(bond));
    }
  }
  return spec;
}

void parse_task(const YAML::Node& node, RunConfig& cfg) {
  require_map(node, "task");
  allow_keys(node, "task", {"kind", "beta", "order", "samples", "seed", "tau", "max_support", "checkpoints"});
  if (!node["kind"]) fail(node, "task.kind is required");
  cfg.task = task_kind(node["kind"]);
  auto& p = cfg.params;
  if (node["beta"]) p.beta = scalar<double>(node["beta"], "task.beta");
  if (node["order"]) p.order = count(node["order"], "task.order");
  if (node["samples"]) p.samples = count(node["samples"], "task.samples");
  if (node["seed"]) p.seed = scalar<std::uint64_t>(node["seed"], "task.seed");
  if (node["tau"]) p.tau = count(node["tau"], "task.tau");
  if (node["max_support"]) p.max_support = count(node["max_support"], "task.max_support");
  if (const auto cp = node["checkpoints"]) {
    if (!cp.IsSequence()) fail(cp, "task.checkpoints must be a list");
    for (const auto& c : cp) p.checkpoints.push_back(count(c, "checkpoint"));
  }
}

MatrixSpec parse_matrix(const YAML::Node& node) {
  require_map(node, "matrix");
  allow_keys(node, "matrix", {"source", "gamma", "entries"});
  MatrixSpec spec;
  const auto source = node["source"] ? scalar<std::string>(node["source"], "matrix.source") : "ising-two-site";
  if (source == "ising-two-site") {
    spec.source = MatrixSpec::Source::ising_two_site;
  } else if (source == "entries") {
    spec.source = MatrixSpec::Source::entries;
    if (!node["entries"]) fail(node, "matrix.entries is required for source 'entries'");
    spec.entries = complex_matrix(node["entries"], "matrix.entries");
  } else if (source == "exact") {
    spec.source = MatrixSpec::Source::exact;
  } else {
    fail(node["source"], "unknown matrix source '" + source + "'");
  }
  if (node["gamma"]) spec.gamma = scalar<double>(node["gamma"], "matrix.gamma");
  return spec;
}

IsingSpec parse_ising(const YAML::Node& node) {
  require_map(node, "ising");
  allow_keys(node, "ising", {"sites", "coupling_time", "coupling_space", "gamma"});
  IsingSpec spec;
  if (node["sites"]) spec.sites = count(node["sites"], "ising.sites");
  if (node["coupling_time"]) spec.coupling_time = complex_value(node["coupling_time"], "ising.coupling_time");
  if (node["coupling_space"]) spec.coupling_space = complex_value(node["coupling_space"], "ising.coupling_space");
  if (node["gamma"]) spec.gamma = scalar<double>(node["gamma"], "ising.gamma");
  return spec;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::exact:
      return "exact";
    case TaskKind::series:
      return "series";
    case TaskKind::mc:
      return "mc";
    case TaskKind::span_test:
      return "span-test";
    case TaskKind::unit_modulus:
      return "unit-modulus";
    case TaskKind::ising_unitarity:
      return "ising-unitarity";
    case TaskKind::ising_partition:
      return "ising-partition";
  }
  return "unknown";
}

IsingCouplings IsingSpec::couplings() const {
  return {sites, coupling_time, coupling_space.value_or(Complex(0.0, gamma))};
}

RunConfig parse_config_text(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line < 0 ? 0 : static_cast<std::size_t>(e.mark.line) + 1);
  }
  if (!root.IsMap()) throw ParseError("config must be a mapping", line_of(root));
  allow_keys(root, "config", {"schema_version", "system", "task", "matrix", "ising", "output"});

  RunConfig cfg;
  if (!root["schema_version"]) fail(root, "schema_version is required");
  cfg.schema_version = scalar<int>(root["schema_version"], "schema_version");
  if (cfg.schema_version != kSchemaVersion) {
    fail(root["schema_version"], "unsupported schema_version " + std::to_string(cfg.schema_version));
  }
  if (!root["task"]) fail(root, "task is required");
  parse_task(root["task"], cfg);
  if (root["system"]) cfg.system = parse_system(root["system"]);
  if (root["matrix"]) cfg.matrix = parse_matrix(root["matrix"]);
  if (root["ising"]) cfg.ising = parse_ising(root["ising"]);
  if (const auto out = root["output"]) {
    require_map(out, "output");
    allow_keys(out, "output", {"directory"});
    if (out["directory"]) cfg.output_dir = scalar<std::string>(out["directory"], "output.directory");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path.string(), 0);
  std::ostringstream text;
  text << in.rdbuf();
  auto cfg = parse_config_text(text.str());
  if (cfg.output_dir.is_relative()) cfg.output_dir = path.parent_path() / cfg.output_dir;
  return cfg;
}

BondSystem build_system(const RunConfig& config) {
  if (!config.system) throw ArgumentError("task '" + std::string(to_string(config.task)) + "' needs a system");
  return BondSystem(config.system->sites, config.system->bonds);
}

void validate_config(const RunConfig& config) {
  const auto& p = config.params;
  auto needs_matrix = [&] {
    if (!config.matrix) throw ArgumentError("task '" + std::string(to_string(config.task)) + "' needs a matrix");
    if (config.matrix->source == MatrixSpec::Source::exact) (void)build_system(config);
    if (config.matrix->source == MatrixSpec::Source::entries && config.matrix->entries.rows() != config.matrix->entries.cols()) {
      throw ArgumentError("matrix.entries must be square");
    }
  };
  switch (config.task) {
    case TaskKind::exact:
      (void)build_system(config);
      break;
    case TaskKind::series:
      (void)build_system(config);
      if (p.order > kMaxSeriesOrder) throw ArgumentError("task.order must be at most " + std::to_string(kMaxSeriesOrder));
      break;
    case TaskKind::mc: {
      (void)build_system(config);
      if (p.beta < 0.0) throw ArgumentError("task.beta must be non-negative for mc");
      if (p.samples < 2) throw ArgumentError("task.samples must be at least 2");
      for (auto c : p.checkpoints) {
        if (c < 2 || c > p.samples) throw ArgumentError("task.checkpoints must lie in [2, samples]");
      }
      break;
    }
    case TaskKind::span_test:
      needs_matrix();
      break;
    case TaskKind::unit_modulus:
      needs_matrix();
      if (p.max_support == 0 || p.max_support > 6) throw ArgumentError("task.max_support must be in [1, 6]");
      break;
    case TaskKind::ising_unitarity:
    case TaskKind::ising_partition:
      if (config.ising.sites < 2) throw ArgumentError("ising.sites must be at least 2");
      if (config.ising.sites > kDefaultMaxSites) throw SizeLimitError("ising.sites exceeds the site limit");
      if (config.task == TaskKind::ising_partition) {
        if (p.tau < 1) throw ArgumentError("task.tau must be at least 1");
        if (config.ising.sites * p.tau > kMaxPartitionSpins) throw SizeLimitError("ising.sites * tau exceeds 24 spins");
      }
      break;
  }
}

}  // namespace logicint::cli
