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

#include "logicint/cli/report.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "logicint/ising_transfer.hpp"
#include "logicint/logic_integral.hpp"
#include "logicint/span_analysis.hpp"

namespace logicint::cli {
namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Json system_to_json(const SystemSpec& s) {
  Json bonds = Json::array();
  for (const auto& b : s.bonds) {
    Json j{{"sites", b.sites}, {"kind", std::string(to_string(b.kind))}, {"coupling", b.coupling}};
    if (b.kind == BondKind::custom) j["matrix"] = matrix_to_json(b.custom);
    bonds.push_back(std::move(j));
  }
  return Json{{"sites", s.sites}, {"bonds", std::move(bonds)}};
}

ComplexMatrix resolve_matrix(const RunConfig& cfg) {
  const auto& spec = *cfg.matrix;
  switch (spec.source) {
    case MatrixSpec::Source::ising_two_site:
      return 2.0 * transfer_matrix(unitary_couplings(2, spec.gamma, -1)).matrix;
    case MatrixSpec::Source::entries:
      return spec.entries;
    case MatrixSpec::Source::exact:
      return hermitian_evolve(build_hamiltonian(build_system(cfg)), cfg.params.beta);
  }
  return {};
}

std::vector<std::size_t> default_checkpoints(std::size_t samples) {
  std::vector<std::size_t> marks;
  for (std::size_t c = 1024; c < samples; c *= 2) marks.push_back(c);
  marks.push_back(samples);
  return marks;
}

}  // namespace

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json gate_sum_to_json(const GateSum& gs) {
  Json terms = Json::array();
  for (const auto& [g, c] : gs.terms()) {
    terms.push_back(Json{{"image", std::vector<PermutationGate::Index>(g.image().begin(), g.image().end())},
                         {"re", c.real()},
                         {"im", c.imag()}});
  }
  return terms;
}

Complex complex_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw ArgumentError("matrix_from_json: empty matrix");
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ArgumentError("matrix_from_json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

GateSum gate_sum_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("gate_sum_from_json: expected a non-empty term list");
  const auto dim = j.at(0).at("image").size();
  GateSum gs(dim);
  for (const auto& term : j) {
    gs.add(PermutationGate(term.at("image").get<std::vector<PermutationGate::Index>>()),
           {term.at("re").get<double>(), term.at("im").get<double>()});
  }
  return gs;
}

Json config_to_json(const RunConfig& cfg) {
  const auto& p = cfg.params;
  Json task{{"kind", std::string(to_string(cfg.task))}};
  switch (cfg.task) {
    case TaskKind::exact:
      task["beta"] = p.beta;
      break;
    case TaskKind::series:
      task["beta"] = p.beta;
      task["order"] = p.order;
      break;
    case TaskKind::mc:
      task["beta"] = p.beta;
      task["samples"] = p.samples;
      task["seed"] = p.seed;
      task["checkpoints"] = p.checkpoints.empty() ? default_checkpoints(p.samples) : p.checkpoints;
      break;
    case TaskKind::span_test:
      break;
    case TaskKind::unit_modulus:
      task["max_support"] = p.max_support;
      break;
    case TaskKind::ising_unitarity:
      break;
    case TaskKind::ising_partition:
      task["tau"] = p.tau;
      break;
  }
  Json j{{"schema_version", cfg.schema_version}, {"task", std::move(task)}};
  if (cfg.system) j["system"] = system_to_json(*cfg.system);
  if (cfg.matrix && (cfg.task == TaskKind::span_test || cfg.task == TaskKind::unit_modulus)) {
    Json m;
    switch (cfg.matrix->source) {
      case MatrixSpec::Source::ising_two_site:
        m = Json{{"source", "ising-two-site"}, {"gamma", cfg.matrix->gamma}};
        break;
      case MatrixSpec::Source::entries:
        m = Json{{"source", "entries"}, {"entries", matrix_to_json(cfg.matrix->entries)}};
        break;
      case MatrixSpec::Source::exact:
        m = Json{{"source", "exact"}, {"beta", p.beta}};
        break;
    }
    j["matrix"] = std::move(m);
  }
  if (cfg.task == TaskKind::ising_unitarity || cfg.task == TaskKind::ising_partition) {
    const auto c = cfg.ising.couplings();
    j["ising"] = Json{{"sites", c.n_sites},
                      {"coupling_time", complex_to_json(c.coupling_time)},
                      {"coupling_space", complex_to_json(c.coupling_space)}};
  }
  return j;
}

RunOutput execute(const RunConfig& cfg) {
  validate_config(cfg);
  const auto& p = cfg.params;
  RunOutput out;
  Json results;
  Json provenance{{"tool", std::string(kToolName)}, {"tool_version", std::string(kToolVersion)},
                  {"schema_version", kSchemaVersion}};

  switch (cfg.task) {
    case TaskKind::exact: {
      const auto sys = build_system(cfg);
      const auto u = hermitian_evolve(build_hamiltonian(sys), p.beta);
      results["unitarity_defect"] = unitarity_defect(u);
      results["matrix"] = matrix_to_json(u);
      break;
    }
    case TaskKind::series: {
      const auto sys = build_system(cfg);
      const auto series = series_expand(sys, p.beta, p.order);
      const auto rendered = render(series.sum);
      results["order"] = series.order;
      results["truncation_bound"] = series.truncation_bound;
      results["frobenius_bound"] = series.frobenius_bound;
      results["distance_to_exact"] = frobenius_distance(rendered, hermitian_evolve(build_hamiltonian(sys), p.beta));
      results["gate_sum"] = gate_sum_to_json(series.sum);
      results["matrix"] = matrix_to_json(rendered);
      break;
    }
    case TaskKind::mc: {
      const auto sys = build_system(cfg);
      const auto marks = p.checkpoints.empty() ? default_checkpoints(p.samples) : p.checkpoints;
      const auto trace = mc_estimate_trace(sys, p.beta, p.samples, p.seed, marks);
      const auto exact = hermitian_evolve(build_hamiltonian(sys), p.beta);
      std::string csv = "sample_count,frobenius_error,stderr\n";
      for (const auto& est : trace) {
        csv += std::to_string(est.samples) + "," + format_double(frobenius_distance(est.mean, exact)) + "," +
               format_double(est.std_error) + "\n";
      }
      const auto& final = trace.back();
      results["samples"] = final.samples;
      results["stderr"] = final.std_error;
      results["distance_to_exact"] = frobenius_distance(final.mean, exact);
      results["mean"] = matrix_to_json(final.mean);
      provenance["seed"] = p.seed;
      out.trace_csv = std::move(csv);
      break;
    }
    case TaskKind::span_test: {
      const auto m = resolve_matrix(cfg);
      const auto report = perm_span_membership(m);
      results["member"] = report.member;
      results["common_sum"] = report.member ? complex_to_json(report.common_sum) : Json(nullptr);
      results["residual"] = report.residual;
      if (m.rows() <= 5) {
        const auto gates = all_permutations(static_cast<std::size_t>(m.rows()));
        const auto ls = least_squares_decompose(m, gates);
        results["least_squares_residual"] = ls.residual;
        results["coefficients"] = gate_sum_to_json(ls.coefficients);
      }
      results["matrix"] = matrix_to_json(m);
      break;
    }
    case TaskKind::unit_modulus: {
      const auto m = resolve_matrix(cfg);
      const auto found = unit_modulus_search(m, p.max_support);
      results["count"] = found.size();
      Json list = Json::array();
      for (const auto& gs : found) list.push_back(gate_sum_to_json(gs));
      results["decompositions"] = std::move(list);
      // The support bound behind a quoted count is a convention, so the
      // neighbouring bounds are reported too (null when over budget).
      Json sweep = Json::object();
      for (std::size_t k = 3; k <= kMaxUnitModulusSupport; ++k) {
        try {
          sweep[std::to_string(k)] = k == p.max_support ? found.size() : unit_modulus_search(m, k).size();
        } catch (const SizeLimitError&) {
          sweep[std::to_string(k)] = nullptr;
        }
      }
      results["counts_by_support"] = std::move(sweep);
      results["matrix"] = matrix_to_json(m);
      break;
    }
    case TaskKind::ising_unitarity: {
      const auto t = transfer_matrix(cfg.ising.couplings());
      results["unitarity_defect"] = unitarity_defect(t.matrix);
      results["matrix"] = matrix_to_json(t.matrix);
      break;
    }
    case TaskKind::ising_partition: {
      const auto check = partition_check(cfg.ising.couplings(), p.tau);
      results["z_brute"] = complex_to_json(check.z_brute);
      results["z_transfer"] = complex_to_json(check.z_transfer);
      results["ratio"] = complex_to_json(check.ratio);
      break;
    }
  }

  out.report = Json{{"inputs", config_to_json(cfg)}, {"results", std::move(results)}, {"provenance", std::move(provenance)}};
  return out;
}

void write_outputs(const RunOutput& output, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "report.json", std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    f << output.report.dump(2) << '\n';
  }
  if (output.trace_csv) {
    std::ofstream f(dir / "trace.csv", std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + (dir / "trace.csv").string());
    f << *output.trace_csv;
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const SizeLimitError*>(&e)) return 4;
  if (dynamic_cast<const Error*>(&e)) return 3;
  return 1;
}

int run_command(const std::filesystem::path& config_path, const std::optional<std::filesystem::path>& out_dir,
                const std::optional<std::uint64_t>& seed, std::ostream& log) {
  try {
    auto cfg = load_config(config_path);
    if (out_dir) cfg.output_dir = *out_dir;
    if (seed) cfg.params.seed = *seed;
    validate_config(cfg);
    const auto output = execute(cfg);
    write_outputs(output, cfg.output_dir);
    log << "wrote " << (cfg.output_dir / "report.json").string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    log << (code == 2 ? "parse error: " : code == 4 ? "size limit: " : code == 3 ? "contract violation: " : "error: ")
        << e.what() << '\n';
    return code;
  }
}

int validate_command(const std::filesystem::path& config_path, std::ostream& log) {
  try {
    validate_config(load_config(config_path));
    log << "ok\n";
    return 0;
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    log << (code == 2 ? "parse error: " : code == 4 ? "size limit: " : code == 3 ? "contract violation: " : "error: ")
        << e.what() << '\n';
    return code;
  }
}

}  // namespace logicint::cli
