// Copyright 2026 The xbar Authors
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

// Command-line driver.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 internal error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xbar/xbar.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xbar::ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw xbar::ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.rfind('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

/// Seed override from the SPINQ_SEED environment variable.
std::optional<std::uint64_t> env_seed() {
  const char* env = std::getenv("SPINQ_SEED");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw xbar::ConfigError(std::string("SPINQ_SEED is not an unsigned integer: ") + env);
}

xbar::ArchConfig load_arch(const std::string& path) {
  xbar::ArchConfig cfg = path.empty() ? xbar::default_config() : xbar::load_config(read_file(path));
  if (auto s = env_seed()) cfg.seed = *s;
  return cfg;
}

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw xbar::ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct CompileArgs {
  std::string input, config, output, qasm;
  bool no_verify = false;
};

int run_compile(const CompileArgs& a) {
  const xbar::ArchConfig cfg = load_arch(a.config);
  std::vector<std::string> warnings;
  xbar::Circuit circuit = xbar::parse_qasm(read_file(a.input), &warnings);
  if (circuit.name.empty()) circuit.name = stem(a.input);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  xbar::CompileResult r = xbar::compile_circuit(circuit, cfg, {!a.no_verify, 12});
  nlohmann::json doc = xbar::compile_document(r, cfg);
  write_file(a.output, doc.dump(1) + "\n");
  if (!a.qasm.empty()) write_file(a.qasm, xbar::schedule_to_qasm(r.schedule));

  const auto& m = r.metrics;
  std::cerr << m.name << ": " << m.n_decomposed << " -> " << m.n_final << " instructions ("
            << m.gate_overhead_pct << "% gate overhead), depth " << m.d_dependency << " -> "
            << m.d_final << " (" << m.depth_overhead_pct << "%), ESP " << m.esp << ", "
            << m.compile_ms << " ms\n";
  if (!r.ok()) {
    std::cerr << "verification failed\n";
    return kVerifyFailed;
  }
  return kOk;
}

int run_verify(const std::string& input) {
  const nlohmann::json doc = load_json(input);
  const xbar::Schedule s = xbar::schedule_from_json(doc);
  xbar::VerifyReport rep = xbar::replay_verify(s);
  xbar::EquivResult eq;
  bool have_eq = false;
  if (rep.replay_ok && doc.contains("circuit")) {
    std::uint64_t seed = 1;
    if (doc.contains("config") && doc["config"].contains("seed")) seed = doc["config"]["seed"].get<std::uint64_t>();
    if (auto e = env_seed()) seed = *e;
    const xbar::Circuit c = xbar::circuit_from_json(doc["circuit"]);
    if (c.n_qubits != s.n_qubits) throw xbar::ConfigError("circuit and schedule sizes differ");
    eq = xbar::statevector_equiv(c, s, 12, seed);
    have_eq = true;
  }
  std::cout << xbar::to_json(rep, have_eq ? &eq : nullptr).dump(1) << "\n";
  bool ok = rep.replay_ok && (!have_eq || eq.skipped || eq.fidelity >= 1.0 - 1e-9);
  return ok ? kOk : kVerifyFailed;
}

int run_stats(const std::string& input, const std::string& qig_path) {
  const nlohmann::json doc = load_json(input);
  const xbar::Schedule s = xbar::schedule_from_json(doc);
  nlohmann::json out;
  out["name"] = s.name;
  out["n_qubits"] = s.n_qubits;
  out["grid"] = s.side;
  out["cycles"] = s.cycles.size();
  out["instructions"] = s.n_instructions();
  if (doc.contains("metrics")) out["metrics"] = doc["metrics"];
  if (doc.contains("circuit")) {
    const xbar::Circuit c = xbar::circuit_from_json(doc["circuit"]);
    const xbar::CountsByType k = xbar::count_by_type(c);
    out["counts"] = {{"n_xy", k.n_xy}, {"n_z", k.n_z}, {"n_twoq", k.n_twoq}, {"n_total", k.n_total}};
    out["twoq_share_pct"] = k.twoq_share_pct();
    out["twoq_ratio_pct"] = k.twoq_ratio_pct();
    out["xy_share_pct"] = k.xy_share_pct();
    const xbar::InteractionGraph g = xbar::interaction_graph(c);
    out["qig"] = xbar::to_edge_list(g);
    if (!qig_path.empty()) write_file(qig_path, xbar::to_dot(g, "qig"));
  } else if (!qig_path.empty()) {
    throw xbar::ConfigError("document has no circuit; cannot build the interaction graph");
  }
  std::cout << out.dump(1) << "\n";
  return kOk;
}

struct BenchArgs {
  int qubits = 0, gates = 0, bv = 0;
  double twoq = 0;
  std::uint64_t seed = 1;
  std::string secret, output;
};

int run_benchgen(const BenchArgs& a) {
  xbar::Circuit c;
  if (a.bv > 0) {
    c = xbar::gen_bernstein_vazirani(a.bv, a.secret.empty() ? std::string(a.bv - 1, '1') : a.secret);
  } else {
    if (a.qubits < 1) throw xbar::ConfigError("--qubits is required");
    c = xbar::gen_random_uniform({a.qubits, a.gates, a.twoq, a.seed});
  }
  write_file(a.output, "// " + c.name + "\n" + xbar::write_qasm(c));
  return kOk;
}

struct SweepArgs {
  std::string qubits, gates, twoq, csv, config;
  int seeds = 1, jobs = 1;
  bool no_verify = false;
};

int run_sweep(const SweepArgs& a) {
  const xbar::ArchConfig cfg = load_arch(a.config);
  xbar::SweepSpec spec{xbar::parse_range(a.qubits), xbar::parse_range(a.gates),
                       xbar::parse_range(a.twoq), a.seeds, a.jobs, !a.no_verify};
  const auto rows = xbar::run_sweep(spec, cfg);
  std::ostringstream os;
  xbar::write_sweep_csv(os, rows);
  write_file(a.csv, os.str());
  int failed = 0;
  for (const auto& r : rows) failed += !r.error.empty();
  std::cerr << rows.size() << " points, " << failed << " failed\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compiler for shared-control spin-qubit crossbar arrays"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Compile a QASM circuit");
  compile->add_option("-i,--input", ca.input, "Input QASM file")->required();
  compile->add_option("-c,--config", ca.config, "Architecture configuration (JSON)");
  compile->add_option("-o,--output", ca.output, "Output schedule document (JSON)")->required();
  compile->add_option("--emit-qasm", ca.qasm, "Also write the schedule as extended QASM");
  compile->add_flag("--no-verify", ca.no_verify, "Skip replay and state-vector verification");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Verify a compiled schedule document");
  verify->add_option("-i,--input", verify_in, "Schedule document")->required();

  std::string stats_in, qig;
  auto* stats = app.add_subcommand("stats", "Print statistics of a compiled schedule");
  stats->add_option("-i,--input", stats_in, "Schedule document")->required();
  stats->add_option("--qig", qig, "Write the qubit interaction graph as DOT");

  BenchArgs ba;
  auto* bench = app.add_subcommand("benchgen", "Generate a benchmark circuit");
  auto* q_opt = bench->add_option("--qubits", ba.qubits, "Number of qubits");
  bench->add_option("--gates", ba.gates, "Number of gates")->needs(q_opt);
  bench->add_option("--twoq", ba.twoq, "Two-qubit gates per 100 single-qubit gates")->needs(q_opt);
  bench->add_option("--seed", ba.seed, "Generator seed");
  auto* bv_opt = bench->add_option("--bv", ba.bv, "Bernstein-Vazirani over N qubits");
  bench->add_option("--secret", ba.secret, "Secret bit string (N-1 bits, default all ones)")->needs(bv_opt);
  bench->add_option("-o,--output", ba.output, "Output QASM file (default stdout)");
  q_opt->excludes(bv_opt);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Compile a grid of random benchmarks into a CSV");
  sweep->add_option("--qubits", sa.qubits, "start:stop:step")->required();
  sweep->add_option("--gates", sa.gates, "start:stop:step")->required();
  sweep->add_option("--twoq", sa.twoq, "start:stop:step")->required();
  sweep->add_option("--seeds", sa.seeds, "Circuits per grid point");
  sweep->add_option("--csv", sa.csv, "Output CSV file")->required();
  sweep->add_option("--jobs", sa.jobs, "Parallel workers");
  sweep->add_option("-c,--config", sa.config, "Architecture configuration (JSON)");
  sweep->add_flag("--no-verify", sa.no_verify, "Skip verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) return run_compile(ca);
    if (*verify) return run_verify(verify_in);
    if (*stats) return run_stats(stats_in, qig);
    if (*bench) return run_benchgen(ba);
    if (*sweep) return run_sweep(sa);
  } catch (const xbar::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const xbar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
