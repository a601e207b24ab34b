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

#pragma once

#include <chrono>
#include <string>
#include <utility>

#include "json.hpp"
#include "xbar/circuit.hpp"
#include "xbar/config.hpp"
#include "xbar/emit.hpp"
#include "xbar/ir.hpp"
#include "xbar/mapper.hpp"
#include "xbar/metrics.hpp"
#include "xbar/scheduler.hpp"
#include "xbar/verifier.hpp"

namespace xbar {

struct CompileOptions {
  bool verify = true;
  int equiv_cap = 12;
};

struct CompileResult {
  Circuit decomposed;
  Schedule schedule;
  ScheduleStats stats;
  MetricsReport metrics;
  bool verified = false;
  VerifyReport verify;
  EquivResult equiv;

  /// Replay passed and, unless skipped, the states agree to 1e-9.
  bool ok() const {
    return !verified || (verify.replay_ok && (equiv.skipped || equiv.fidelity >= 1.0 - 1e-9));
  }
};

/// Decompose, place, schedule, measure and (optionally) verify. Only the
/// scheduling step is timed.
inline CompileResult compile_circuit(const Circuit& circuit, const ArchConfig& cfg,
                                     const CompileOptions& opt = {}) {
  CompileResult r;
  r.decomposed = decompose(circuit, cfg);
  if (r.decomposed.gates.empty()) throw CircuitError("empty circuit");
  const Grid grid = initial_placement(r.decomposed);

  auto t0 = std::chrono::steady_clock::now();
  r.schedule = schedule_integrated(r.decomposed, grid, &r.stats);
  auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  r.metrics = overhead_report(r.decomposed, r.schedule, build_fidelity_map(grid.side(), cfg), ms);
  if (opt.verify) {
    r.verified = true;
    r.verify = replay_verify(r.schedule);
    if (r.verify.replay_ok) r.equiv = statevector_equiv(r.decomposed, r.schedule, opt.equiv_cap, cfg.seed);
  }
  return r;
}

/// QASM text and the authoritative JSON schedule.
inline std::pair<std::string, nlohmann::json> emit_output(const Schedule& s) {
  return {schedule_to_qasm(s), schedule_to_json(s)};
}

/// The document written by `xbar compile`: the schedule plus the decomposed
/// circuit, metrics, verification results and the fidelity configuration.
inline nlohmann::json compile_document(const CompileResult& r, const ArchConfig& cfg) {
  nlohmann::json doc = schedule_to_json(r.schedule);
  doc["circuit"] = circuit_to_json(r.decomposed);
  doc["metrics"] = to_json(r.metrics);
  doc["stats"] = {{"ideal_units", r.stats.ideal_units},
                  {"split_units", r.stats.split_units},
                  {"max_rounds", r.stats.max_rounds}};
  if (r.verified) doc["verify"] = to_json(r.verify, &r.equiv);
  doc["config"] = fidelity_config_to_json(cfg);
  return doc;
}

}  // namespace xbar
