// Copyright 2026 The qroute Authors
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

#include <sys/resource.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qroute/dependency.hpp"
#include "qroute/generator.hpp"
#include "qroute/interaction.hpp"
#include "qroute/qasm.hpp"
#include "qroute/router.hpp"
#include "qroute/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kReportSchemaVersion = "1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

double user_time_ms() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_utime.tv_sec * 1000.0 + usage.ru_utime.tv_usec / 1000.0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct RouteOptions {
  double alpha = 0.5;
  double beta = 0.6;
  int tau_regular = 0;
  int tau_forced = 0;
  std::string direction = "forward";
  std::string forced = "fallback";
  bool meta = false;
  std::uint64_t seed = 0;
  bool serial = false;

  qroute::RouterConfig to_config() const {
    qroute::RouterConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.tau_regular = tau_regular;
    cfg.tau_forced = tau_forced;
    cfg.direction = direction == "bidi" ? qroute::Direction::Bidirectional
                                        : qroute::Direction::Forward;
    cfg.forced_mode = forced == "standalone" ? qroute::ForcedMode::Standalone
                                             : qroute::ForcedMode::Fallback;
    cfg.seed = seed;
    return cfg;
  }

  json to_json() const {
    json j;
    j["meta"] = meta;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["tau_regular"] = tau_regular;
    j["tau_forced"] = tau_forced;
    j["direction"] = direction;
    j["forced"] = forced;
    j["seed"] = seed;
    return j;
  }
};

void add_route_options(CLI::App* app, RouteOptions& opts) {
  app->add_option("--alpha", opts.alpha, "Layering discount factor in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--beta", opts.beta, "Prior mapping weight in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--tau-regular", opts.tau_regular,
                  "Cutoff layer for the regular graph (default: M)");
  app->add_option("--tau-forced", opts.tau_forced,
                  "Cutoff layer for the forced graph (default: 4M)");
  app->add_option("--direction", opts.direction, "forward or bidi")
      ->check(CLI::IsMember({"forward", "bidi"}));
  app->add_option("--forced", opts.forced, "standalone or fallback")
      ->check(CLI::IsMember({"standalone", "fallback"}));
  app->add_flag("--meta", opts.meta,
                "Run all ten (alpha,beta) configurations, keep the best");
  app->add_option("--seed", opts.seed, "Tie-breaking seed");
  app->add_flag("--serial", opts.serial, "Disable parallel execution");
}

struct RunOutcome {
  qroute::RoutedCircuit routed;
  qroute::MetaReport meta_report;
  double cpu_ms = 0;
};

RunOutcome run_route(const qroute::LogicalProgram& program,
                     const RouteOptions& opts) {
  RunOutcome out;
  double t0 = user_time_ms();
  if (opts.meta) {
    out.routed = qroute::route_meta(program, {}, &out.meta_report,
                                    !opts.serial, opts.seed);
  } else {
    out.routed = qroute::route(program, opts.to_config());
  }
  out.cpu_ms = user_time_ms() - t0;
  return out;
}

json record_json(const std::string& name, const qroute::LogicalProgram& prog,
                 const RunOutcome& outcome, const RouteOptions& opts,
                 const std::optional<bool>& verified) {
  json j;
  j["file"] = name;
  j["qubits"] = prog.num_qubits;
  j["cnots"] = prog.cnot_count();
  j["config"] = opts.to_json();
  j["swaps"] = outcome.routed.swap_count();
  j["cpu_ms"] = outcome.cpu_ms;
  if (verified)
    j["verified"] = *verified;
  else
    j["verified"] = nullptr;
  if (opts.meta) {
    json per = json::array();
    for (const auto& r : outcome.meta_report.per_config) {
      per.push_back({{"alpha", r.alpha},
                     {"beta", r.beta},
                     {"swaps", r.swap_count},
                     {"wall_ms", r.wall_ms}});
    }
    j["meta_per_config"] = per;
    j["meta_chosen"] = outcome.meta_report.chosen_index;
  }
  return j;
}

int cmd_route(const std::string& input, const std::string& output,
              const RouteOptions& opts, bool decompose,
              const std::string& verify_mode, const std::string& report_path,
              const std::string& dump_graph_path) {
  qroute::LogicalProgram prog;
  try {
    prog = qroute::parse_program(read_file(input));
  } catch (const std::exception& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return kExitInputError;
  }

  if (!dump_graph_path.empty()) {
    // Debug view: the first-iteration weight matrix under these parameters.
    auto expanded = qroute::expand_swaps(prog);
    auto deps = qroute::DependencyState::build(expanded.cnot_indices());
    int tau = opts.tau_regular > 0 ? opts.tau_regular : prog.num_qubits;
    auto graph = qroute::InteractionGraph::build(
        deps, prog.num_qubits, std::nullopt, opts.alpha, opts.beta, tau);
    std::ofstream out(dump_graph_path);
    graph.dump_csv(out);
  }

  RunOutcome outcome = run_route(prog, opts);

  std::optional<bool> verified;
  if (!verify_mode.empty()) {
    bool ok = true;
    if (verify_mode == "perm" || verify_mode == "both")
      ok = ok && qroute::check_compliance(outcome.routed) &&
           qroute::check_equivalence_permutation(prog, outcome.routed);
    if (verify_mode == "unitary" || verify_mode == "both") {
      if (prog.num_qubits <= 10) {
        ok = ok && qroute::check_equivalence_unitary(prog, outcome.routed);
      } else if (verify_mode == "unitary") {
        // too large to simulate; fall back to the structural oracles
        ok = ok && qroute::check_compliance(outcome.routed) &&
             qroute::check_equivalence_permutation(prog, outcome.routed);
      }
    }
    verified = ok;
  }

  std::string text = qroute::emit_program(outcome.routed, decompose);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);

  if (!report_path.empty()) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["records"] = json::array(
        {record_json(input, prog, outcome, opts, verified)});
    write_file(report_path, j.dump(2) + "\n");
  }

  std::cerr << input << ": " << outcome.routed.swap_count() << " swaps, "
            << outcome.cpu_ms << " ms";
  if (verified) std::cerr << (*verified ? ", verified" : ", VERIFY FAILED");
  std::cerr << "\n";

  if (verified && !*verified) return kExitVerifyFailed;
  return kExitOk;
}

int cmd_bench(const std::string& dir, const RouteOptions& opts,
              const std::string& verify_mode, const std::string& csv_path,
              const std::string& json_path) {
  std::vector<std::string> files;
  try {
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".qasm")
        files.push_back(entry.path().string());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::sort(files.begin(), files.end());

  json records = json::array();
  std::vector<std::string> csv_rows;
  long total_swaps = 0;
  double total_ms = 0;
  bool any_verify_failed = false;

  for (const std::string& file : files) {
    std::string name = fs::path(file).filename().string();
    try {
      qroute::LogicalProgram prog = qroute::parse_program(read_file(file));
      RunOutcome outcome = run_route(prog, opts);

      std::optional<bool> verified;
      if (!verify_mode.empty()) {
        bool ok = qroute::check_compliance(outcome.routed) &&
                  qroute::check_equivalence_permutation(prog, outcome.routed);
        if ((verify_mode == "unitary" || verify_mode == "both") &&
            prog.num_qubits <= 10)
          ok = ok && qroute::check_equivalence_unitary(prog, outcome.routed);
        verified = ok;
        if (!ok) any_verify_failed = true;
      }

      records.push_back(record_json(name, prog, outcome, opts, verified));
      std::ostringstream row;
      row << name << "," << prog.num_qubits << "," << prog.cnot_count() << ","
          << outcome.routed.swap_count() << "," << outcome.cpu_ms << ","
          << (verified ? (*verified ? "true" : "false") : "");
      if (opts.meta)
        for (const auto& r : outcome.meta_report.per_config)
          row << "," << r.swap_count;
      csv_rows.push_back(row.str());
      total_swaps += outcome.routed.swap_count();
      total_ms += outcome.cpu_ms;
      std::cerr << name << ": " << outcome.routed.swap_count() << " swaps\n";
    } catch (const std::exception& e) {
      json j;
      j["file"] = name;
      j["error"] = e.what();
      records.push_back(j);
      csv_rows.push_back(name + ",,,,,error");
      std::cerr << name << ": error: " << e.what() << "\n";
    }
  }

  std::cerr << files.size() << " files, " << total_swaps << " total swaps, "
            << total_ms << " ms total\n";

  if (!csv_path.empty()) {
    std::ostringstream os;
    os << "name,M,N,swaps,cpu_ms,verified";
    if (opts.meta)
      for (std::size_t i = 0; i < qroute::meta_pairs().size(); ++i)
        os << ",cfg" << i << "_swaps";
    os << "\n";
    for (const std::string& row : csv_rows) os << row << "\n";
    write_file(csv_path, os.str());
  }
  if (!json_path.empty()) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["records"] = records;
    j["summary"] = {{"files", files.size()},
                    {"total_swaps", total_swaps},
                    {"total_cpu_ms", total_ms}};
    write_file(json_path, j.dump(2) + "\n");
  }

  return any_verify_failed ? kExitVerifyFailed : kExitOk;
}

int cmd_gen(const std::string& kind, int m, int n, std::uint64_t seed,
            const std::string& output) {
  qroute::LogicalProgram prog;
  try {
    prog = qroute::generate(kind, m, n, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  // Identity-routed emission reuses the canonical printer.
  qroute::RoutedCircuit identity;
  identity.num_qubits = prog.num_qubits;
  identity.initial_mapping = qroute::Mapping::identity(prog.num_qubits);
  identity.final_mapping = identity.initial_mapping;
  qroute::CnotBlock blk;
  blk.mapping = identity.initial_mapping;
  auto cnots = prog.cnot_indices();
  for (const auto& [c, t] : cnots) {
    blk.physical_cnots.emplace_back(c, t);
    blk.source_indices.push_back(
        static_cast<int>(blk.source_indices.size()));
  }
  identity.blocks.push_back(std::move(blk));
  identity.source = prog;

  std::string text = qroute::emit_program(identity, false);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral LNN routing for OpenQASM circuits"};
  app.require_subcommand(1);

  // route
  auto* route_cmd =
      app.add_subcommand("route", "Route one QASM file onto the line");
  std::string route_input, route_output, verify_mode, report_path;
  std::string dump_graph_path;
  bool decompose = false;
  RouteOptions route_opts;
  route_cmd->add_option("input", route_input, "Input .qasm file")->required();
  route_cmd->add_option("-o,--output", route_output,
                        "Output file (default: stdout)");
  add_route_options(route_cmd, route_opts);
  route_cmd->add_flag("--decompose-swaps", decompose,
                      "Emit SWAPs as three CNOTs");
  route_cmd->add_option("--verify", verify_mode, "perm, unitary or both")
      ->check(CLI::IsMember({"perm", "unitary", "both"}));
  route_cmd->add_option("--report", report_path, "Write a JSON run record");
  route_cmd->add_option("--dump-graph", dump_graph_path,
                        "Write the first interaction graph as CSV");

  // bench
  auto* bench_cmd =
      app.add_subcommand("bench", "Route every .qasm file in a directory");
  std::string bench_dir, bench_csv, bench_json, bench_verify;
  RouteOptions bench_opts;
  bench_cmd->add_option("dir", bench_dir, "Directory of .qasm files")
      ->required();
  add_route_options(bench_cmd, bench_opts);
  bench_cmd->add_option("--verify", bench_verify, "perm, unitary or both")
      ->check(CLI::IsMember({"perm", "unitary", "both"}));
  bench_cmd->add_option("--csv", bench_csv, "Write a CSV table");
  bench_cmd->add_option("--json", bench_json, "Write a JSON report");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark fixture");
  std::string gen_kind = "random", gen_output;
  int gen_m = 5, gen_n = 20;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--kind", gen_kind, "random, linear, chain or triangle")
      ->check(CLI::IsMember({"random", "linear", "chain", "triangle"}));
  gen_cmd->add_option("-m,--qubits", gen_m, "Number of qubits");
  gen_cmd->add_option("-n,--cnots", gen_n, "Number of CNOTs");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("-o,--output", gen_output,
                      "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (route_cmd->parsed())
      return cmd_route(route_input, route_output, route_opts, decompose,
                       verify_mode, report_path, dump_graph_path);
    if (bench_cmd->parsed())
      return cmd_bench(bench_dir, bench_opts, bench_verify, bench_csv,
                       bench_json);
    if (gen_cmd->parsed())
      return cmd_gen(gen_kind, gen_m, gen_n, gen_seed, gen_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
