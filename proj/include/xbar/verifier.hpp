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

/**
 * @file verifier.hpp
 * @brief Independent checks of a compiled schedule.
 *
 * replay_verify re-runs the crossbar legality check on every cycle and
 * compares the resulting occupancy with the stored position history.
 * statevector_equiv simulates the decomposed circuit and the schedule side
 * by side. Schedule semantics are taken literally: plain shuttles are the
 * identity, ZSH applies RZ of its angle, semi-global pulses rotate every
 * qubit in the addressed parity and SQSWAP applies the sqrt(SWAP) matrix.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xbar/circuit.hpp"
#include "xbar/crossbar.hpp"
#include "xbar/instruction.hpp"
#include "xbar/scheduler.hpp"
#include "xbar/statevector.hpp"

namespace xbar {

struct Violation {
  int cycle = 0;
  ConflictReport report;
};

struct VerifyReport {
  bool replay_ok = true;
  std::vector<Violation> violations;
  std::vector<int> position_mismatches;  // cycle indices; -1 for the final state
  std::vector<std::string> notes;
};

/// Replays `s` from its initial placement. Never throws on a bad schedule;
/// every problem is recorded in the report.
inline VerifyReport replay_verify(const Schedule& s) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    rep.replay_ok = false;
    rep.notes.push_back(std::move(why));
  };

  Grid g;
  try {
    g = s.initial_grid();
  } catch (const Error& e) {
    fail(std::string("invalid placement: ") + e.what());
    return rep;
  }
  if (g.n_qubits() != s.n_qubits) fail("placement does not cover every qubit");
  if (!g.is_idle()) fail("initial placement is not the idle configuration");
  if (s.positions.size() != s.cycles.size()) fail("position history length differs from cycle count");

  std::size_t next_end = 0;
  for (std::size_t k = 0; k < s.cycles.size(); ++k) {
    const Cycle& c = s.cycles[k];
    const int ck = static_cast<int>(k);
    if (c.instructions.empty()) fail("cycle " + std::to_string(k) + " is empty");

    std::vector<int> foreign;
    for (std::size_t i = 0; i < c.instructions.size(); ++i)
      if (!kind_matches(c.type, c.instructions[i].kind)) foreign.push_back(static_cast<int>(i));
    if (!foreign.empty()) {
      rep.violations.push_back({ck, ConflictReport::conflict(
                                        ConflictKind::MIXED_TYPES, foreign,
                                        "instruction outside the " +
                                            std::string(cycle_type_name(c.type)) + " family")});
    }
    ConflictReport cr = check_parallel_set(g, c.instructions);
    if (!cr.ok) rep.violations.push_back({ck, cr});

    try {
      g = apply_cycle(std::move(g), c);
    } catch (const Error& e) {
      fail("cycle " + std::to_string(k) + " cannot be applied: " + e.what());
      break;
    }
    if (k < s.positions.size() && s.positions[k] != g.positions()) rep.position_mismatches.push_back(ck);
    while (next_end < s.block_ends.size() && s.block_ends[next_end] == ck + 1) {
      if (!g.is_idle()) fail("block ending at cycle " + std::to_string(k) + " leaves the idle configuration");
      ++next_end;
    }
  }
  if (next_end != s.block_ends.size()) fail("block boundaries are not increasing cycle counts");
  if (!g.is_idle()) {
    rep.position_mismatches.push_back(-1);
    rep.notes.push_back("final occupancy is not the idle configuration");
  }
  if (!rep.violations.empty() || !rep.position_mismatches.empty()) rep.replay_ok = false;
  return rep;
}

struct EquivResult {
  bool skipped = false;
  double fidelity = 1.0;
};

/// Runs the schedule on `psi` with literal instruction semantics.
inline void simulate_schedule(const Schedule& s, StateVector& psi) {
  Grid g = s.initial_grid();
  for (const Cycle& c : s.cycles) {
    for (const Instruction& in : c.instructions) {
      switch (in.kind) {
        case InstrKind::ZSH: psi.apply(rz_matrix(in.angle), in.q0); break;
        case InstrKind::SG_ROT:
        case InstrKind::SG_ROT_INV: {
          Mat2 m = in.axis == Axis::X ? rx_matrix(in.angle) : ry_matrix(in.angle);
          for (QubitId q : g.qubits_in(in.parity)) psi.apply(m, q);
          break;
        }
        case InstrKind::SQSWAP: psi.apply(sqswap_matrix(), in.q0, in.q1); break;
        default: break;  // plain shuttles and ZSH_RET carry no rotation
      }
    }
    g = apply_cycle(std::move(g), c);
  }
}

/// Minimum of |<circuit|schedule>|^2 over the all-zero state and three
/// seeded random product states. Skipped above `cap` qubits.
inline EquivResult statevector_equiv(const Circuit& decomposed, const Schedule& s, int cap = 12,
                                     std::uint64_t seed = 1) {
  EquivResult r;
  if (decomposed.n_qubits > cap) {
    r.skipped = true;
    return r;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 4; ++t) {
    StateVector a = t == 0 ? StateVector(decomposed.n_qubits)
                           : StateVector::random_product(decomposed.n_qubits, rng);
    StateVector b = a;
    a.apply(decomposed);
    simulate_schedule(s, b);
    r.fidelity = std::min(r.fidelity, a.overlap(b));
  }
  return r;
}

inline nlohmann::json to_json(const ConflictReport& r) {
  nlohmann::json j{{"ok", r.ok}};
  if (!r.ok) {
    j["kind"] = std::string(conflict_kind_name(r.kind));
    j["culprits"] = r.culprits;
    j["detail"] = r.detail;
    if (!r.ql_cycle.empty()) j["ql_cycle"] = r.ql_cycle;
  }
  return j;
}

inline nlohmann::json to_json(const VerifyReport& v, const EquivResult* eq = nullptr) {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& x : v.violations) viol.push_back({{"cycle", x.cycle}, {"report", to_json(x.report)}});
  nlohmann::json j{{"replay_ok", v.replay_ok},
                   {"violations", viol},
                   {"position_mismatches", v.position_mismatches},
                   {"notes", v.notes}};
  if (eq) {
    if (eq->skipped) {
      j["equivalence_fidelity"] = "skipped";
    } else {
      j["equivalence_fidelity"] = eq->fidelity;
    }
  }
  return j;
}

}  // namespace xbar
