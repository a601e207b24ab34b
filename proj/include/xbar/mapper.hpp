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

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "xbar/circuit.hpp"
#include "xbar/crossbar.hpp"
#include "xbar/errors.hpp"
#include "xbar/instruction.hpp"

namespace xbar {

enum class BlockType { TWOQ, Z, XY };

/// Instructions generated for one or more source gates, already grouped
/// into cycles.
struct RoutedBlock {
  BlockType type = BlockType::TWOQ;
  std::vector<int> sources;
  std::vector<Cycle> steps;

  std::size_t n_instructions() const {
    std::size_t n = 0;
    for (const Cycle& c : steps) n += c.instructions.size();
    return n;
  }
};

/// Trivial placement of `circuit` on its smallest checkerboard grid.
inline Grid initial_placement(const Circuit& circuit) { return grid_for(circuit.n_qubits); }

namespace mapper_detail {

inline int manhattan(Site a, Site b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

inline bool diagonal(Site a, Site b) {
  return std::abs(a.x - b.x) == 1 && std::abs(a.y - b.y) == 1;
}

inline Direction horizontal(int dx) { return dx > 0 ? Direction::Right : Direction::Left; }
inline Direction vertical(int dy) { return dy > 0 ? Direction::Up : Direction::Down; }

/// Replays `c` on `g` after checking it; throws InternalError on conflict.
inline void commit(Grid& g, const Cycle& c, const char* what) {
  auto rep = check_parallel_set(g, c.instructions);
  if (!rep.ok) {
    throw InternalError(std::string(what) + " produced " +
                        std::string(conflict_kind_name(rep.kind)) + ": " + rep.detail);
  }
  g = apply_cycle(std::move(g), c);
}

}  // namespace mapper_detail

/// Next diagonal step of `a` toward the diagonal neighbourhood of `b`.
inline Site next_swap_site(const Grid& g, Site a, Site b) {
  using mapper_detail::manhattan;
  std::vector<Site> goals;
  for (int dx : {-1, 1})
    for (int dy : {-1, 1})
      if (g.in_grid({b.x + dx, b.y + dy})) goals.push_back({b.x + dx, b.y + dy});

  auto cost = [&](Site s) {
    int best = manhattan(s, goals.front());
    for (Site t : goals) best = std::min(best, manhattan(s, t));
    return best;
  };
  bool found = false;
  Site pick{};
  std::tuple<int, int, int, int> key{};
  for (int dx : {-1, 1})
    for (int dy : {-1, 1}) {
      Site s{a.x + dx, a.y + dy};
      if (!g.in_grid(s) || s == b) continue;
      int reduces_dx = std::abs(s.x - b.x) < std::abs(a.x - b.x) ? 0 : 1;
      std::tuple<int, int, int, int> k{cost(s), reduces_dx, s.x, s.y};
      if (!found || k < key) {
        found = true;
        key = k;
        pick = s;
      }
    }
  if (!found) throw InternalError("no diagonal step available");
  return pick;
}

/// Routes qubit `a` next to `b` with shuttle-based SWAPs, then brackets the
/// sqswap with a horizontal shuttle of `a` into `b`'s column and back.
///
/// Each SWAP is two cycles: both qubits shuttle horizontally in opposite
/// directions, then vertically in opposite directions.
inline RoutedBlock route_two_qubit(const Grid& grid, QubitId a, QubitId b,
                                   std::vector<int> sources = {}) {
  using namespace mapper_detail;
  if (a == b) throw InternalError("two-qubit gate on a single qubit");
  Grid g = grid;
  RoutedBlock block;
  block.type = BlockType::TWOQ;
  block.sources = sources;

  const Site pb = g.site_of(b);
  while (!diagonal(g.site_of(a), pb)) {
    Site pa = g.site_of(a);
    Site to = next_swap_site(g, pa, pb);
    int dx = to.x - pa.x, dy = to.y - pa.y;
    QubitId partner = g.at(to);
    Cycle h{CycleType::SHUTTLE, {Instruction::shuttle(a, horizontal(dx), sources)}};
    Cycle v{CycleType::SHUTTLE, {Instruction::shuttle(a, vertical(dy), sources)}};
    if (partner >= 0) {
      h.instructions.push_back(Instruction::shuttle(partner, horizontal(-dx), sources));
      v.instructions.push_back(Instruction::shuttle(partner, vertical(-dy), sources));
    }
    commit(g, h, "swap step");
    commit(g, v, "swap step");
    block.steps.push_back(std::move(h));
    block.steps.push_back(std::move(v));
  }

  const Direction in = horizontal(pb.x - g.site_of(a).x);
  Cycle go{CycleType::SHUTTLE, {Instruction::shuttle(a, in, sources)}};
  Cycle gate{CycleType::TWOQ, {Instruction::sqswap(a, b, sources)}};
  Cycle back{CycleType::SHUTTLE, {Instruction::shuttle(a, opposite(in), sources)}};
  for (Cycle* c : {&go, &gate, &back}) {
    commit(g, *c, "sqswap bracket");
    block.steps.push_back(std::move(*c));
  }
  return block;
}

/// Z rotation by a timed shuttle to a horizontally adjacent empty site and
/// back; the left neighbour is preferred.
inline RoutedBlock z_route(const Grid& g, QubitId q, double angle, std::vector<int> sources = {}) {
  Site s = g.site_of(q);
  Direction d;
  if (g.in_grid(step(s, Direction::Left)) && !g.occupied(step(s, Direction::Left))) {
    d = Direction::Left;
  } else if (g.in_grid(step(s, Direction::Right)) && !g.occupied(step(s, Direction::Right))) {
    d = Direction::Right;
  } else {
    throw InternalError("qubit " + std::to_string(q) + " has no free horizontal neighbour");
  }
  RoutedBlock block;
  block.type = BlockType::Z;
  block.sources = sources;
  block.steps.push_back({CycleType::Z, {Instruction::zsh(q, angle, d, sources)}});
  block.steps.push_back({CycleType::Z, {Instruction::zsh_ret(q, opposite(d), sources)}});
  return block;
}

/// Several Z rotations issued together: all outbound shuttles in one cycle,
/// all returns in the next.
inline RoutedBlock z_route_many(const Grid& g, const std::vector<QubitId>& qs,
                                const std::vector<double>& angles,
                                const std::vector<std::vector<int>>& sources) {
  RoutedBlock out;
  out.type = BlockType::Z;
  out.steps = {{CycleType::Z, {}}, {CycleType::Z, {}}};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    RoutedBlock one = z_route(g, qs[i], angles[i], sources[i]);
    out.sources.insert(out.sources.end(), sources[i].begin(), sources[i].end());
    out.steps[0].instructions.push_back(one.steps[0].instructions[0]);
    out.steps[1].instructions.push_back(one.steps[1].instructions[0]);
  }
  return out;
}

/// Semi-global rotation of `targets`, all in columns of one parity.
///
/// When the targets are every qubit of that parity a single pulse suffices.
/// Otherwise: pulse the parity, move the targets to the other parity, apply
/// the inverse pulse to the spectators left behind, move the targets back.
/// Targets share a direction (right, else left); if neither works for all of
/// them each target picks its own. `per_target`, when given, holds the
/// source gates of each target's shuttles.
inline RoutedBlock expand_semi_global(const Grid& g, const std::vector<QubitId>& targets, Axis axis,
                                      double angle, std::vector<int> sources = {},
                                      const std::vector<std::vector<int>>& per_target = {}) {
  if (targets.empty()) throw InternalError("semi-global rotation without targets");
  const Parity p = parity_of(g.site_of(targets.front()));
  for (QubitId q : targets) {
    if (parity_of(g.site_of(q)) != p) throw InternalError("semi-global targets span both parities");
  }
  RoutedBlock block;
  block.type = BlockType::XY;
  block.sources = sources;
  block.steps.push_back({CycleType::XY_ROT, {Instruction::sg_rot(p, axis, angle, sources)}});

  std::vector<QubitId> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == g.qubits_in(p)) return block;

  auto free_to = [&](QubitId q, Direction d) {
    Site to = step(g.site_of(q), d);
    return g.in_grid(to) && !g.occupied(to);
  };
  auto all_free = [&](Direction d) {
    return std::all_of(targets.begin(), targets.end(), [&](QubitId q) { return free_to(q, d); });
  };
  std::vector<Direction> dirs;
  for (QubitId q : targets) {
    if (all_free(Direction::Right)) {
      dirs.push_back(Direction::Right);
    } else if (all_free(Direction::Left)) {
      dirs.push_back(Direction::Left);
    } else if (free_to(q, Direction::Right)) {
      dirs.push_back(Direction::Right);
    } else if (free_to(q, Direction::Left)) {
      dirs.push_back(Direction::Left);
    } else {
      throw InternalError("qubit " + std::to_string(q) + " cannot leave its column");
    }
  }
  Cycle out{CycleType::SHUTTLE, {}}, back{CycleType::SHUTTLE, {}};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& src = per_target.empty() ? sources : per_target[i];
    out.instructions.push_back(Instruction::shuttle(targets[i], dirs[i], src));
    back.instructions.push_back(Instruction::shuttle(targets[i], opposite(dirs[i]), src));
  }
  block.steps.push_back(std::move(out));
  block.steps.push_back({CycleType::XY_ROT_INV, {Instruction::sg_rot_inv(p, axis, -angle, sources)}});
  block.steps.push_back(std::move(back));
  return block;
}

}  // namespace xbar
