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

#include <compare>
#include <string_view>
#include <vector>

#include "xbar/circuit.hpp"

namespace xbar {

/// A dot on the crossbar: x is the column from the left, y the row from the
/// bottom.
struct Site {
  int x = 0;
  int y = 0;

  auto operator<=>(const Site&) const = default;
};

/// Index of the diagonal qubit line through a site.
constexpr int ql_index(Site s) { return s.x - s.y; }

/// 0 for even columns, 1 for odd columns.
enum class Parity { Even = 0, Odd = 1 };

constexpr Parity parity_of(Site s) { return (s.x % 2 == 0) ? Parity::Even : Parity::Odd; }
constexpr Parity other(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
constexpr std::string_view parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

enum class Direction { Left, Right, Up, Down };

constexpr Site step(Site s, Direction d) {
  switch (d) {
    case Direction::Left: return {s.x - 1, s.y};
    case Direction::Right: return {s.x + 1, s.y};
    case Direction::Up: return {s.x, s.y + 1};
    case Direction::Down: return {s.x, s.y - 1};
  }
  return s;
}

constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
  }
  return d;
}

constexpr bool is_horizontal(Direction d) {
  return d == Direction::Left || d == Direction::Right;
}

constexpr std::string_view direction_letter(Direction d) {
  switch (d) {
    case Direction::Left: return "l";
    case Direction::Right: return "r";
    case Direction::Up: return "u";
    case Direction::Down: return "d";
  }
  return "?";
}

enum class Axis { X, Y };

enum class InstrKind { SH_L, SH_R, SH_U, SH_D, ZSH, ZSH_RET, SG_ROT, SG_ROT_INV, SQSWAP };

constexpr bool is_shuttle(InstrKind k) {
  return k == InstrKind::SH_L || k == InstrKind::SH_R || k == InstrKind::SH_U ||
         k == InstrKind::SH_D || k == InstrKind::ZSH || k == InstrKind::ZSH_RET;
}

/// Semi-global rotations are driven by AC signals; everything else is DC.
constexpr bool is_ac(InstrKind k) { return k == InstrKind::SG_ROT || k == InstrKind::SG_ROT_INV; }

constexpr std::string_view instr_name(InstrKind k) {
  switch (k) {
    case InstrKind::SH_L: return "sh_l";
    case InstrKind::SH_R: return "sh_r";
    case InstrKind::SH_U: return "sh_u";
    case InstrKind::SH_D: return "sh_d";
    case InstrKind::ZSH: return "zsh";
    case InstrKind::ZSH_RET: return "zsh_ret";
    case InstrKind::SG_ROT: return "sg_rot";
    case InstrKind::SG_ROT_INV: return "sg_rot_inv";
    case InstrKind::SQSWAP: return "sqswap";
  }
  return "?";
}

/// One crossbar instruction.
///
/// Shuttles use `q0` and `dir` (implied by the kind for SH_*). ZSH carries the
/// Z phase in `angle`. SG_ROT/SG_ROT_INV address a column parity with an
/// axis and angle. SQSWAP acts on `q0`, `q1`. `sources` are the indices of
/// the decomposed-circuit gates this instruction was generated for.
struct Instruction {
  InstrKind kind = InstrKind::SH_L;
  QubitId q0 = -1;
  QubitId q1 = -1;
  Direction dir = Direction::Left;
  Parity parity = Parity::Even;
  Axis axis = Axis::X;
  double angle = 0.0;
  std::vector<int> sources;

  bool operator==(const Instruction&) const = default;

  static Instruction shuttle(QubitId q, Direction d, std::vector<int> src = {}) {
    static constexpr InstrKind kinds[] = {InstrKind::SH_L, InstrKind::SH_R, InstrKind::SH_U,
                                          InstrKind::SH_D};
    Instruction i;
    i.kind = kinds[static_cast<int>(d)];
    i.q0 = q;
    i.dir = d;
    i.sources = std::move(src);
    return i;
  }
  static Instruction zsh(QubitId q, double angle, Direction d, std::vector<int> src = {}) {
    Instruction i;
    i.kind = InstrKind::ZSH;
    i.q0 = q;
    i.dir = d;
    i.angle = angle;
    i.sources = std::move(src);
    return i;
  }
  static Instruction zsh_ret(QubitId q, Direction d, std::vector<int> src = {}) {
    Instruction i;
    i.kind = InstrKind::ZSH_RET;
    i.q0 = q;
    i.dir = d;
    i.sources = std::move(src);
    return i;
  }
  static Instruction sg_rot(Parity p, Axis a, double angle, std::vector<int> src = {}) {
    Instruction i;
    i.kind = InstrKind::SG_ROT;
    i.parity = p;
    i.axis = a;
    i.angle = angle;
    i.sources = std::move(src);
    return i;
  }
  static Instruction sg_rot_inv(Parity p, Axis a, double angle, std::vector<int> src = {}) {
    Instruction i = sg_rot(p, a, angle, std::move(src));
    i.kind = InstrKind::SG_ROT_INV;
    return i;
  }
  static Instruction sqswap(QubitId a, QubitId b, std::vector<int> src = {}) {
    Instruction i;
    i.kind = InstrKind::SQSWAP;
    i.q0 = a;
    i.q1 = b;
    i.sources = std::move(src);
    return i;
  }
};

/// Each cycle carries one instruction family.
enum class CycleType { XY_ROT, XY_ROT_INV, Z, SHUTTLE, TWOQ };

constexpr std::string_view cycle_type_name(CycleType t) {
  switch (t) {
    case CycleType::XY_ROT: return "xy_rot";
    case CycleType::XY_ROT_INV: return "xy_rot_inv";
    case CycleType::Z: return "z";
    case CycleType::SHUTTLE: return "shuttle";
    case CycleType::TWOQ: return "twoq";
  }
  return "?";
}

/// Whether an instruction kind belongs to a cycle type's family.
constexpr bool kind_matches(CycleType t, InstrKind k) {
  switch (t) {
    case CycleType::XY_ROT: return k == InstrKind::SG_ROT;
    case CycleType::XY_ROT_INV: return k == InstrKind::SG_ROT_INV;
    case CycleType::Z: return k == InstrKind::ZSH || k == InstrKind::ZSH_RET;
    case CycleType::SHUTTLE:
      return k == InstrKind::SH_L || k == InstrKind::SH_R || k == InstrKind::SH_U ||
             k == InstrKind::SH_D;
    case CycleType::TWOQ: return k == InstrKind::SQSWAP;
  }
  return false;
}

struct Cycle {
  CycleType type = CycleType::SHUTTLE;
  std::vector<Instruction> instructions;

  bool operator==(const Cycle&) const = default;
};

}  // namespace xbar
