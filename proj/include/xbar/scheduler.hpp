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
 * @file scheduler.hpp
 * @brief Two-pass scheduling of a decomposed circuit onto the crossbar.
 *
 * Pass 1 walks the dependency levels and forms ideal cycles: every RZ on
 * its own, RX/RY gates of one level grouped by axis and angle, every SQSWAP
 * as its own unit. Units of a level are ordered by their earliest gate.
 *
 * Pass 2 expands each unit into crossbar instructions on the current
 * occupancy. Two-qubit units become routed blocks placed whole. Z and XY
 * units are expanded and checked; when the expansion conflicts, the unit is
 * split into conflict-free parts by split_cycle.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xbar/circuit.hpp"
#include "xbar/crossbar.hpp"
#include "xbar/errors.hpp"
#include "xbar/instruction.hpp"
#include "xbar/ir.hpp"
#include "xbar/mapper.hpp"

namespace xbar {

/// A compiled program: cycles plus the position history after each cycle.
struct Schedule {
  std::string name;
  int n_qubits = 0;
  int side = 0;
  std::vector<Site> placement;
  std::vector<Cycle> cycles;
  std::vector<std::vector<Site>> positions;
  std::vector<int> block_ends;  // cycle count after each routed block

  Grid initial_grid() const { return Grid(side, placement); }

  std::size_t n_instructions() const {
    std::size_t n = 0;
    for (const Cycle& c : cycles) n += c.instructions.size();
    return n;
  }

  bool operator==(const Schedule&) const = default;
};

enum class UnitKind { Z, XY, TWOQ };

/// One pass-1 cycle: the gates (indices into the circuit) it contains.
struct IdealUnit {
  UnitKind kind = UnitKind::Z;
  int level = 0;
  std::vector<int> gates;
};

/// Pass 1.
inline std::vector<IdealUnit> plan_ideal_cycles(const Circuit& circuit) {
  if (!circuit.native_only()) throw CircuitError("scheduler expects a decomposed circuit");
  const auto levels = asap_levels(circuit);
  int depth = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  std::vector<std::vector<int>> by_level(static_cast<std::size_t>(depth) + 1);
  for (std::size_t i = 0; i < levels.size(); ++i) by_level[levels[i]].push_back(static_cast<int>(i));

  std::vector<IdealUnit> out;
  for (int level = 1; level <= depth; ++level) {
    std::vector<IdealUnit> units;
    std::map<std::pair<GateKind, double>, std::size_t> xy_group;
    for (int gi : by_level[level]) {
      const Gate& g = circuit.gates[gi];
      if (g.kind == GateKind::RX || g.kind == GateKind::RY) {
        auto [it, fresh] = xy_group.emplace(std::make_pair(g.kind, g.angle), units.size());
        if (fresh) units.push_back({UnitKind::XY, level, {}});
        units[it->second].gates.push_back(gi);
      } else {
        units.push_back({g.kind == GateKind::RZ ? UnitKind::Z : UnitKind::TWOQ, level, {gi}});
      }
    }
    // Units were created in order of their earliest gate.
    for (auto& u : units) out.push_back(std::move(u));
  }
  return out;
}

/// Replays `block` from `g`, checking every step. On success stores the end
/// occupancy in `end`.
inline bool block_conflict_free(const Grid& g, const RoutedBlock& block, Grid* end = nullptr) {
  Grid cur = g;
  for (const Cycle& c : block.steps) {
    if (c.instructions.empty() || !check_parallel_set(cur, c.instructions).ok) return false;
    cur = apply_cycle(std::move(cur), c);
  }
  if (end) *end = std::move(cur);
  return true;
}

using BlockBuilder = std::function<RoutedBlock(const Grid&, const std::vector<int>&)>;

struct SplitResult {
  std::vector<RoutedBlock> parts;
  int rounds = 0;
};

/// Splits `gates` into blocks that are each conflict-free.
///
/// Each round scans the remaining gates in order and keeps a gate when the
/// block built from the kept gates plus this one is still conflict-free; the
/// kept block is committed and the rest go to the next round.
inline SplitResult split_cycle(const Grid& grid, const std::vector<int>& gates,
                               const BlockBuilder& build) {
  SplitResult res;
  Grid g = grid;
  std::vector<int> remaining = gates;
  while (!remaining.empty()) {
    ++res.rounds;
    RoutedBlock whole = build(g, remaining);
    if (block_conflict_free(g, whole, &g)) {
      res.parts.push_back(std::move(whole));
      break;
    }
    std::vector<int> kept, deferred;
    for (int gi : remaining) {
      kept.push_back(gi);
      if (!block_conflict_free(g, build(g, kept))) {
        kept.pop_back();
        deferred.push_back(gi);
      }
    }
    if (kept.empty()) {
      throw InternalError("gate " + std::to_string(remaining.front()) +
                          " conflicts with the grid on its own");
    }
    RoutedBlock part = build(g, kept);
    block_conflict_free(g, part, &g);
    res.parts.push_back(std::move(part));
    remaining = std::move(deferred);
  }
  return res;
}

/// Block builders for the two single-qubit unit kinds.
inline BlockBuilder z_builder(const Circuit& c) {
  return [&c](const Grid& g, const std::vector<int>& gates) {
    std::vector<QubitId> qs;
    std::vector<double> angles;
    std::vector<std::vector<int>> src;
    for (int gi : gates) {
      qs.push_back(c.gates[gi].qubits[0]);
      angles.push_back(c.gates[gi].angle);
      src.push_back({gi});
    }
    return z_route_many(g, qs, angles, src);
  };
}

inline BlockBuilder xy_builder(const Circuit& c) {
  return [&c](const Grid& g, const std::vector<int>& gates) {
    std::vector<QubitId> targets;
    std::vector<std::vector<int>> per_target;
    for (int gi : gates) {
      targets.push_back(c.gates[gi].qubits[0]);
      per_target.push_back({gi});
    }
    const Gate& first = c.gates[gates.front()];
    Axis axis = first.kind == GateKind::RX ? Axis::X : Axis::Y;
    return expand_semi_global(g, targets, axis, first.angle, gates, per_target);
  };
}

struct ScheduleStats {
  int ideal_units = 0;
  int split_units = 0;  // units that needed more than one round
  int max_rounds = 0;
};

namespace scheduler_detail {

struct Emitter {
  Schedule& out;
  Grid grid;

  void emit(Cycle c) {
    auto rep = check_parallel_set(grid, c.instructions);
    if (!rep.ok) {
      throw InternalError("cycle " + std::to_string(out.cycles.size()) + " (" +
                          std::string(cycle_type_name(c.type)) + ") has " +
                          std::string(conflict_kind_name(rep.kind)) + ": " + rep.detail);
    }
    grid = apply_cycle(std::move(grid), c);
    out.cycles.push_back(std::move(c));
    out.positions.push_back(grid.positions());
  }
  void emit(RoutedBlock b) {
    for (Cycle& c : b.steps) emit(std::move(c));
    out.block_ends.push_back(static_cast<int>(out.cycles.size()));
  }
};

}  // namespace scheduler_detail

/// Compiles a decomposed circuit starting from occupancy `grid`.
inline Schedule schedule_integrated(const Circuit& circuit, const Grid& grid,
                                    ScheduleStats* stats = nullptr) {
  circuit.validate();
  if (grid.n_qubits() != circuit.n_qubits) throw InternalError("grid and circuit sizes differ");
  if (!grid.is_idle()) throw InternalError("scheduling must start from the idle configuration");

  Schedule s;
  s.name = circuit.name;
  s.n_qubits = circuit.n_qubits;
  s.side = grid.side();
  s.placement = grid.positions();
  scheduler_detail::Emitter em{s, grid};
  ScheduleStats st;

  const BlockBuilder zb = z_builder(circuit), xyb = xy_builder(circuit);
  auto run_split = [&](const std::vector<int>& gates, const BlockBuilder& b) {
    SplitResult r = split_cycle(em.grid, gates, b);
    if (r.rounds > 1) ++st.split_units;
    st.max_rounds = std::max(st.max_rounds, r.rounds);
    for (RoutedBlock& part : r.parts) em.emit(std::move(part));
  };

  for (const IdealUnit& u : plan_ideal_cycles(circuit)) {
    ++st.ideal_units;
    switch (u.kind) {
      case UnitKind::TWOQ: {
        const Gate& g = circuit.gates[u.gates.front()];
        em.emit(route_two_qubit(em.grid, g.qubits[0], g.qubits[1], u.gates));
        break;
      }
      case UnitKind::Z: run_split(u.gates, zb); break;
      case UnitKind::XY: {
        // One pulse addresses one column parity.
        std::vector<int> even, odd;
        for (int gi : u.gates) {
          Parity p = parity_of(em.grid.site_of(circuit.gates[gi].qubits[0]));
          (p == Parity::Even ? even : odd).push_back(gi);
        }
        std::vector<std::vector<int>> groups;
        if (!even.empty()) groups.push_back(even);
        if (!odd.empty()) groups.push_back(odd);
        std::sort(groups.begin(), groups.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        for (const auto& grp : groups) run_split(grp, xyb);
        break;
      }
    }
  }
  if (!em.grid.is_idle()) throw InternalError("schedule does not end in the idle configuration");
  if (stats) *stats = st;
  return s;
}

/// Schedules from the trivial placement.
inline Schedule schedule_integrated(const Circuit& circuit, ScheduleStats* stats = nullptr) {
  return schedule_integrated(circuit, initial_placement(circuit), stats);
}

}  // namespace xbar
