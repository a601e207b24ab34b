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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xbar/errors.hpp"

namespace xbar {

using QubitId = int;

/// Gate kinds. RX/RY/RZ/SQSWAP are native to the crossbar; the rest are
/// front-end kinds that must be decomposed before mapping.
enum class GateKind {
  RX,
  RY,
  RZ,
  SQSWAP,
  H,
  X,
  Y,
  Z,
  S,
  SDG,
  T,
  TDG,
  CNOT,
  CZ,
  MEASURE,
};

inline constexpr std::array<GateKind, 15> kAllGateKinds = {
    GateKind::RX, GateKind::RY,  GateKind::RZ, GateKind::SQSWAP, GateKind::H,
    GateKind::X,  GateKind::Y,   GateKind::Z,  GateKind::S,      GateKind::SDG,
    GateKind::T,  GateKind::TDG, GateKind::CNOT, GateKind::CZ,   GateKind::MEASURE};

constexpr bool is_native(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ ||
         k == GateKind::SQSWAP;
}

constexpr bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

constexpr int arity(GateKind k) {
  switch (k) {
    case GateKind::SQSWAP:
    case GateKind::CNOT:
    case GateKind::CZ:
      return 2;
    default:
      return 1;
  }
}

/// Lower-case QASM spelling.
constexpr std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::SQSWAP: return "sqswap";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::SDG: return "sdg";
    case GateKind::T: return "t";
    case GateKind::TDG: return "tdg";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::MEASURE: return "measure";
  }
  return "?";
}

inline std::optional<GateKind> gate_from_name(std::string_view name) {
  for (GateKind k : kAllGateKinds) {
    if (gate_name(k) == name) return k;
  }
  if (name == "cnot") return GateKind::CNOT;
  return std::nullopt;
}

struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;  // radians; meaningful for rotations only
  std::array<QubitId, 2> qubits{-1, -1};

  int arity() const { return xbar::arity(kind); }
  std::span<const QubitId> operands() const {
    return {qubits.data(), static_cast<std::size_t>(arity())};
  }

  static Gate one(GateKind k, QubitId q, double angle = 0.0) {
    return Gate{k, angle, {q, -1}};
  }
  static Gate two(GateKind k, QubitId a, QubitId b) {
    return Gate{k, 0.0, {a, b}};
  }
  static Gate rx(QubitId q, double a) { return one(GateKind::RX, q, a); }
  static Gate ry(QubitId q, double a) { return one(GateKind::RY, q, a); }
  static Gate rz(QubitId q, double a) { return one(GateKind::RZ, q, a); }
  static Gate sqswap(QubitId a, QubitId b) { return two(GateKind::SQSWAP, a, b); }
  static Gate cnot(QubitId c, QubitId t) { return two(GateKind::CNOT, c, t); }

  bool operator==(const Gate&) const = default;
};

/// An ordered gate list over `n_qubits` virtual qubits.
struct Circuit {
  std::string name;
  int n_qubits = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;

  /// Throws CircuitError if any gate references a qubit outside the
  /// register or a two-qubit gate has equal operands.
  void validate() const {
    if (n_qubits < 1) throw CircuitError("circuit needs at least one qubit");
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      for (QubitId q : g.operands()) {
        if (q < 0 || q >= n_qubits) {
          throw CircuitError("gate " + std::to_string(i) + " (" +
                             std::string(gate_name(g.kind)) +
                             ") operand out of range: " + std::to_string(q));
        }
      }
      if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
        throw CircuitError("gate " + std::to_string(i) +
                           " has identical operands");
      }
    }
  }

  bool native_only() const {
    for (const Gate& g : gates) {
      if (!is_native(g.kind)) return false;
    }
    return true;
  }
};

}  // namespace xbar
