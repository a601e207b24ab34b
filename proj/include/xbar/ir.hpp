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
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xbar/circuit.hpp"
#include "xbar/config.hpp"
#include "xbar/errors.hpp"

namespace xbar {

/// Rewrites every front-end gate with its template from `config`. Native
/// gates pass through untouched; program order is preserved.
inline Circuit decompose(const Circuit& circuit, const ArchConfig& config) {
  circuit.validate();
  Circuit out;
  out.name = circuit.name;
  out.n_qubits = circuit.n_qubits;
  out.gates.reserve(circuit.gates.size());
  for (const Gate& g : circuit.gates) {
    if (is_native(g.kind)) {
      out.gates.push_back(g);
      continue;
    }
    auto it = config.decompositions.find(g.kind);
    if (it == config.decompositions.end()) {
      throw CircuitError("no decomposition rule for gate '" + std::string(gate_name(g.kind)) + "'");
    }
    for (const TemplateGate& t : it->second) {
      Gate n;
      n.kind = t.kind;
      n.angle = t.angle;
      for (std::size_t i = 0; i < t.roles.size(); ++i) n.qubits[i] = g.qubits[t.roles[i]];
      out.gates.push_back(n);
    }
  }
  return out;
}

/// 1-based ASAP level of every gate. Gates sharing an operand are ordered
/// by program order; commutation is ignored.
inline std::vector<int> asap_levels(const Circuit& circuit) {
  std::vector<int> last(static_cast<std::size_t>(std::max(circuit.n_qubits, 0)), 0);
  std::vector<int> levels;
  levels.reserve(circuit.gates.size());
  for (const Gate& g : circuit.gates) {
    int level = 0;
    for (QubitId q : g.operands()) level = std::max(level, last[q]);
    ++level;
    for (QubitId q : g.operands()) last[q] = level;
    levels.push_back(level);
  }
  return levels;
}

/// Length of the dependency-only ASAP schedule.
inline int dependency_depth(const Circuit& circuit) {
  if (circuit.gates.empty()) throw CircuitError("empty circuit");
  auto levels = asap_levels(circuit);
  return *std::max_element(levels.begin(), levels.end());
}

struct CountsByType {
  std::size_t n_xy = 0;
  std::size_t n_z = 0;
  std::size_t n_twoq = 0;
  std::size_t n_total = 0;

  /// Two-qubit gates as a share of all gates, in percent.
  double twoq_share_pct() const { return n_total ? 100.0 * n_twoq / n_total : 0.0; }
  /// Two-qubit gates relative to single-qubit gates, in percent.
  double twoq_ratio_pct() const {
    std::size_t single = n_xy + n_z;
    return single ? 100.0 * n_twoq / single : 0.0;
  }
  double xy_share_pct() const { return n_total ? 100.0 * n_xy / n_total : 0.0; }

  bool operator==(const CountsByType&) const = default;
};

/// Counts of a decomposed circuit. Throws if a non-native gate is present.
inline CountsByType count_by_type(const Circuit& circuit) {
  CountsByType c;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::RX:
      case GateKind::RY: ++c.n_xy; break;
      case GateKind::RZ: ++c.n_z; break;
      case GateKind::SQSWAP: ++c.n_twoq; break;
      default:
        throw CircuitError("count_by_type expects a decomposed circuit, found '" +
                           std::string(gate_name(g.kind)) + "'");
    }
  }
  c.n_total = c.n_xy + c.n_z + c.n_twoq;
  return c;
}

/// Qubit interaction graph: edge weight = number of SQSWAPs on the pair.
struct InteractionGraph {
  int n_nodes = 0;
  std::map<std::pair<QubitId, QubitId>, int> edges;  // key has first < second

  int total_weight() const {
    int w = 0;
    for (const auto& [_, v] : edges) w += v;
    return w;
  }
};

inline InteractionGraph interaction_graph(const Circuit& circuit) {
  InteractionGraph g;
  g.n_nodes = circuit.n_qubits;
  for (const Gate& gate : circuit.gates) {
    if (gate.kind != GateKind::SQSWAP) continue;
    auto a = std::min(gate.qubits[0], gate.qubits[1]);
    auto b = std::max(gate.qubits[0], gate.qubits[1]);
    ++g.edges[{a, b}];
  }
  return g;
}

inline std::string to_dot(const InteractionGraph& g, const std::string& name = "qig") {
  std::string out = "graph " + name + " {\n";
  for (int i = 0; i < g.n_nodes; ++i) out += "  q" + std::to_string(i) + ";\n";
  for (const auto& [e, w] : g.edges) {
    out += "  q" + std::to_string(e.first) + " -- q" + std::to_string(e.second) +
           " [weight=" + std::to_string(w) + ", label=\"" + std::to_string(w) + "\"];\n";
  }
  out += "}\n";
  return out;
}

/// `[{a, b, w}]` edge list.
inline nlohmann::json to_edge_list(const InteractionGraph& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, w] : g.edges) arr.push_back({{"a", e.first}, {"b", e.second}, {"w", w}});
  return arr;
}

}  // namespace xbar
