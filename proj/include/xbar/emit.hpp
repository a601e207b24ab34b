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
 * @file emit.hpp
 * @brief Text and JSON forms of compiled schedules.
 *
 * Schedule document:
 * @code
 * {"name": "...", "n": 8, "grid": 4,
 *  "placement": [[0,0], [2,0], ...],
 *  "cycles": [{"type": "shuttle", "ops": [{"kind": "sh_l", "q": 2, "src": [0]}]}, ...],
 *  "positions": [[[0,0], ...], ...]}
 * @endcode
 * Op fields by kind: shuttles carry `q`; zsh carries `q`, `dir`, `angle`;
 * zsh_ret `q`, `dir`; sg_rot/sg_rot_inv `parity`, `axis`, `angle`; sqswap
 * `q` as a pair. `src` lists source gate indices.
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "xbar/circuit.hpp"
#include "xbar/errors.hpp"
#include "xbar/instruction.hpp"
#include "xbar/qasm.hpp"
#include "xbar/scheduler.hpp"

namespace xbar {

/// One instruction in the extended QASM dialect, without the newline.
inline std::string instruction_qasm(const Instruction& in) {
  auto q = [](QubitId i) { return "q[" + std::to_string(i) + "]"; };
  switch (in.kind) {
    case InstrKind::SH_L:
    case InstrKind::SH_R:
    case InstrKind::SH_U:
    case InstrKind::SH_D: return std::string(instr_name(in.kind)) + " " + q(in.q0) + ";";
    case InstrKind::ZSH: return "zsh(" + format_angle(in.angle) + ") " + q(in.q0) + ";";
    case InstrKind::ZSH_RET: return "zsh_ret " + q(in.q0) + ";";
    case InstrKind::SG_ROT:
    case InstrKind::SG_ROT_INV: {
      std::string name = in.axis == Axis::X ? "sg_rx" : "sg_ry";
      if (in.kind == InstrKind::SG_ROT_INV) name += "_inv";
      return name + "(" + format_angle(in.angle) + ") " + std::string(parity_name(in.parity)) + ";";
    }
    case InstrKind::SQSWAP: return "sqswap " + q(in.q0) + "," + q(in.q1) + ";";
  }
  return "";
}

inline std::string schedule_to_qasm(const Schedule& s) {
  std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(s.n_qubits) + "];\n";
  for (std::size_t k = 0; k < s.cycles.size(); ++k) {
    const Cycle& c = s.cycles[k];
    out += "// cycle " + std::to_string(k) + " [" + std::string(cycle_type_name(c.type)) + "]\n";
    for (const Instruction& in : c.instructions) out += instruction_qasm(in) + "\n";
  }
  return out;
}

namespace emit_detail {

using nlohmann::json;

inline json sites(const std::vector<Site>& v) {
  json a = json::array();
  for (Site s : v) a.push_back({s.x, s.y});
  return a;
}

inline std::vector<Site> read_sites(const json& a, const std::string& where) {
  if (!a.is_array()) throw ConfigError(where + ": expected an array of [x, y]");
  std::vector<Site> out;
  for (const json& p : a) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw ConfigError(where + ": expected [x, y]");
    }
    out.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

inline Direction read_dir(const std::string& s) {
  if (s == "l") return Direction::Left;
  if (s == "r") return Direction::Right;
  if (s == "u") return Direction::Up;
  if (s == "d") return Direction::Down;
  throw ConfigError("unknown direction '" + s + "'");
}

inline const json& field(const json& o, const char* key, const std::string& where) {
  if (!o.is_object() || !o.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  return o.at(key);
}

}  // namespace emit_detail

inline nlohmann::json instruction_to_json(const Instruction& in) {
  nlohmann::json j{{"kind", std::string(instr_name(in.kind))}};
  switch (in.kind) {
    case InstrKind::SQSWAP: j["q"] = {in.q0, in.q1}; break;
    case InstrKind::SG_ROT:
    case InstrKind::SG_ROT_INV:
      j["parity"] = std::string(parity_name(in.parity));
      j["axis"] = in.axis == Axis::X ? "x" : "y";
      j["angle"] = in.angle;
      break;
    case InstrKind::ZSH:
      j["q"] = in.q0;
      j["dir"] = std::string(direction_letter(in.dir));
      j["angle"] = in.angle;
      break;
    case InstrKind::ZSH_RET:
      j["q"] = in.q0;
      j["dir"] = std::string(direction_letter(in.dir));
      break;
    default: j["q"] = in.q0; break;
  }
  j["src"] = in.sources;
  return j;
}

inline Instruction instruction_from_json(const nlohmann::json& j, const std::string& where) {
  using namespace emit_detail;
  const std::string kind = field(j, "kind", where).get<std::string>();
  std::vector<int> src;
  if (j.contains("src")) src = j.at("src").get<std::vector<int>>();
  auto qubit = [&] { return field(j, "q", where).get<QubitId>(); };
  auto angle = [&] { return field(j, "angle", where).get<double>(); };
  if (kind == "sh_l") return Instruction::shuttle(qubit(), Direction::Left, src);
  if (kind == "sh_r") return Instruction::shuttle(qubit(), Direction::Right, src);
  if (kind == "sh_u") return Instruction::shuttle(qubit(), Direction::Up, src);
  if (kind == "sh_d") return Instruction::shuttle(qubit(), Direction::Down, src);
  if (kind == "zsh") {
    return Instruction::zsh(qubit(), angle(), read_dir(field(j, "dir", where).get<std::string>()), src);
  }
  if (kind == "zsh_ret") {
    return Instruction::zsh_ret(qubit(), read_dir(field(j, "dir", where).get<std::string>()), src);
  }
  if (kind == "sg_rot" || kind == "sg_rot_inv") {
    const std::string p = field(j, "parity", where).get<std::string>();
    const std::string a = field(j, "axis", where).get<std::string>();
    if ((p != "even" && p != "odd") || (a != "x" && a != "y")) {
      throw ConfigError(where + ": bad parity or axis");
    }
    Parity par = p == "even" ? Parity::Even : Parity::Odd;
    Axis ax = a == "x" ? Axis::X : Axis::Y;
    return kind == "sg_rot" ? Instruction::sg_rot(par, ax, angle(), src)
                            : Instruction::sg_rot_inv(par, ax, angle(), src);
  }
  if (kind == "sqswap") {
    const auto& q = field(j, "q", where);
    if (!q.is_array() || q.size() != 2) throw ConfigError(where + ": sqswap needs two qubits");
    return Instruction::sqswap(q[0].get<QubitId>(), q[1].get<QubitId>(), src);
  }
  throw ConfigError(where + ": unknown instruction '" + kind + "'");
}

inline nlohmann::json schedule_to_json(const Schedule& s) {
  using namespace emit_detail;
  json cycles = json::array();
  for (const Cycle& c : s.cycles) {
    json ops = json::array();
    for (const Instruction& in : c.instructions) ops.push_back(instruction_to_json(in));
    cycles.push_back({{"type", std::string(cycle_type_name(c.type))}, {"ops", ops}});
  }
  json positions = json::array();
  for (const auto& p : s.positions) positions.push_back(sites(p));
  return {{"name", s.name},       {"n", s.n_qubits},   {"grid", s.side},
          {"placement", sites(s.placement)}, {"cycles", cycles}, {"positions", positions},
          {"block_ends", s.block_ends}};
}

/// Inverse of schedule_to_json. Throws ConfigError on malformed documents.
inline Schedule schedule_from_json(const nlohmann::json& doc) {
  using namespace emit_detail;
  try {
    Schedule s;
    s.name = doc.value("name", std::string());
    s.n_qubits = field(doc, "n", "schedule").get<int>();
    s.side = field(doc, "grid", "schedule").get<int>();
    s.placement = read_sites(field(doc, "placement", "schedule"), "placement");
    const json& cycles = field(doc, "cycles", "schedule");
    if (!cycles.is_array()) throw ConfigError("schedule.cycles: expected an array");
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const std::string where = "cycles[" + std::to_string(k) + "]";
      const std::string type = field(cycles[k], "type", where).get<std::string>();
      Cycle c;
      bool known = false;
      for (CycleType t : {CycleType::XY_ROT, CycleType::XY_ROT_INV, CycleType::Z, CycleType::SHUTTLE,
                          CycleType::TWOQ}) {
        if (cycle_type_name(t) == type) {
          c.type = t;
          known = true;
        }
      }
      if (!known) throw ConfigError(where + ": unknown cycle type '" + type + "'");
      const json& ops = field(cycles[k], "ops", where);
      for (std::size_t i = 0; i < ops.size(); ++i) {
        c.instructions.push_back(instruction_from_json(ops[i], where + ".ops[" + std::to_string(i) + "]"));
      }
      s.cycles.push_back(std::move(c));
    }
    const json& positions = field(doc, "positions", "schedule");
    for (std::size_t k = 0; k < positions.size(); ++k) {
      s.positions.push_back(read_sites(positions[k], "positions[" + std::to_string(k) + "]"));
    }
    if (doc.contains("block_ends")) s.block_ends = doc["block_ends"].get<std::vector<int>>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed schedule document: ") + e.what());
  }
}

inline nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json j{{"kind", std::string(gate_name(g.kind))},
                     {"q", std::vector<QubitId>(g.operands().begin(), g.operands().end())}};
    if (is_rotation(g.kind)) j["angle"] = g.angle;
    gates.push_back(j);
  }
  return {{"name", c.name}, {"n", c.n_qubits}, {"gates", gates}};
}

inline Circuit circuit_from_json(const nlohmann::json& doc) {
  using namespace emit_detail;
  try {
    Circuit c;
    c.name = doc.value("name", std::string());
    c.n_qubits = field(doc, "n", "circuit").get<int>();
    for (const json& g : field(doc, "gates", "circuit")) {
      auto kind = gate_from_name(field(g, "kind", "gate").get<std::string>());
      if (!kind) throw ConfigError("circuit: unknown gate kind");
      auto q = field(g, "q", "gate").get<std::vector<QubitId>>();
      if (static_cast<int>(q.size()) != arity(*kind)) throw ConfigError("circuit: wrong operand count");
      Gate gate;
      gate.kind = *kind;
      for (std::size_t i = 0; i < q.size(); ++i) gate.qubits[i] = q[i];
      if (is_rotation(*kind)) gate.angle = field(g, "angle", "gate").get<double>();
      c.gates.push_back(gate);
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed circuit document: ") + e.what());
  } catch (const CircuitError& e) {
    throw ConfigError(std::string("invalid circuit document: ") + e.what());
  }
}

}  // namespace xbar
