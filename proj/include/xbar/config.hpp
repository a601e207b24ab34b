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
 * @file config.hpp
 * @brief Architecture configuration: decomposition templates, fidelity
 * model parameters and the RNG seed.
 *
 * JSON schema (every key optional):
 * @code
 * {
 *   "seed": 7,
 *   "fidelities": {
 *     "single_qubit": {"mean": 0.9999, "std": 0.00005},
 *     "shuttle":      {"mean": 0.9999, "std": 0.00005},
 *     "sqswap":       {"mean": 0.9998, "std": 0.00005}
 *   },
 *   "decompositions": {
 *     "h": [{"kind": "rz", "angle": "pi", "operand_roles": [0]},
 *           {"kind": "ry", "angle": "pi/2", "operand_roles": [0]}]
 *   }
 * }
 * @endcode
 * Angles are numbers (radians) or expressions accepted by eval_angle.
 * A decomposition entry replaces the built-in rule for that kind.
 */
#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "xbar/circuit.hpp"
#include "xbar/errors.hpp"
#include "xbar/qasm.hpp"

namespace xbar {

/// One native gate of a decomposition template. `roles[i]` selects which
/// operand of the source gate becomes operand i of this gate.
struct TemplateGate {
  GateKind kind = GateKind::RZ;
  double angle = 0.0;
  std::vector<int> roles;

  bool operator==(const TemplateGate&) const = default;
};

using DecompositionRule = std::vector<TemplateGate>;

struct FidelityParams {
  double mean = 0.9999;
  double std = 0.00005;

  bool operator==(const FidelityParams&) const = default;
};

struct ArchConfig {
  std::map<GateKind, DecompositionRule> decompositions;
  FidelityParams single_qubit{0.9999, 0.00005};
  FidelityParams shuttle{0.9999, 0.00005};
  FidelityParams sqswap{0.9998, 0.00005};
  std::uint64_t seed = 1;

  bool operator==(const ArchConfig&) const = default;
};

/// Built-in decomposition rules. Each one composes to the front-end unitary
/// up to a global phase; see tests/test_ir.cpp for the matrix oracle.
inline std::map<GateKind, DecompositionRule> default_decompositions() {
  using std::numbers::pi;
  auto rz = [](double a, int r) { return TemplateGate{GateKind::RZ, a, {r}}; };
  auto ry = [](double a, int r) { return TemplateGate{GateKind::RY, a, {r}}; };
  auto rx = [](double a, int r) { return TemplateGate{GateKind::RX, a, {r}}; };
  const TemplateGate sq{GateKind::SQSWAP, 0.0, {0, 1}};

  std::map<GateKind, DecompositionRule> rules;
  rules[GateKind::H] = {rz(pi, 0), ry(pi / 2, 0)};
  rules[GateKind::X] = {rx(pi, 0)};
  rules[GateKind::Y] = {ry(pi, 0)};
  rules[GateKind::Z] = {rz(pi, 0)};
  rules[GateKind::S] = {rz(pi / 2, 0)};
  rules[GateKind::SDG] = {rz(-pi / 2, 0)};
  rules[GateKind::T] = {rz(pi / 4, 0)};
  rules[GateKind::TDG] = {rz(-pi / 4, 0)};
  // role 0 = control, role 1 = target
  rules[GateKind::CNOT] = {ry(pi / 2, 1), sq, rz(pi / 2, 0), rz(-pi / 2, 1), sq, ry(-pi / 2, 1)};
  rules[GateKind::CZ] = {sq, rz(pi, 0), sq, rz(pi / 2, 0), rz(-pi / 2, 1)};
  return rules;
}

inline ArchConfig default_config() {
  ArchConfig c;
  c.decompositions = default_decompositions();
  return c;
}

namespace config_detail {

using nlohmann::json;

inline void require_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

inline double read_number(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return eval_angle(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  throw ConfigError(where + ": expected a number");
}

inline FidelityParams read_fidelity(const json& v, FidelityParams def, const std::string& where) {
  require_keys(v, {"mean", "std"}, where);
  FidelityParams f = def;
  if (v.contains("mean")) f.mean = read_number(v["mean"], where + ".mean");
  if (v.contains("std")) f.std = read_number(v["std"], where + ".std");
  if (!(f.mean > 0.0 && f.mean <= 1.0)) {
    throw ConfigError(where + ".mean must lie in (0, 1], got " + std::to_string(f.mean));
  }
  if (!(f.std >= 0.0)) throw ConfigError(where + ".std must be non-negative");
  return f;
}

inline GateKind read_kind(const std::string& name, const std::string& where) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto k = gate_from_name(lower);
  if (!k) throw ConfigError(where + ": unknown gate kind '" + name + "'");
  return *k;
}

}  // namespace config_detail

/// Parses a configuration document; absent keys take the documented defaults.
inline ArchConfig load_config(std::string_view text) {
  using namespace config_detail;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  require_keys(doc, {"seed", "fidelities", "decompositions"}, "config");

  ArchConfig cfg = default_config();
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_integer()) throw ConfigError("config.seed: expected an integer");
    cfg.seed = s.is_number_unsigned() ? s.get<std::uint64_t>()
                                      : static_cast<std::uint64_t>(s.get<std::int64_t>());
  }
  if (doc.contains("fidelities")) {
    const json& f = doc["fidelities"];
    require_keys(f, {"single_qubit", "shuttle", "sqswap"}, "config.fidelities");
    if (f.contains("single_qubit"))
      cfg.single_qubit = read_fidelity(f["single_qubit"], cfg.single_qubit, "fidelities.single_qubit");
    if (f.contains("shuttle"))
      cfg.shuttle = read_fidelity(f["shuttle"], cfg.shuttle, "fidelities.shuttle");
    if (f.contains("sqswap"))
      cfg.sqswap = read_fidelity(f["sqswap"], cfg.sqswap, "fidelities.sqswap");
  }
  if (doc.contains("decompositions")) {
    const json& d = doc["decompositions"];
    if (!d.is_object()) throw ConfigError("config.decompositions: expected an object");
    for (const auto& [name, tmpl] : d.items()) {
      const std::string where = "decompositions." + name;
      GateKind src = read_kind(name, where);
      if (is_native(src) || src == GateKind::MEASURE) {
        throw ConfigError(where + ": only front-end kinds can be decomposed");
      }
      if (!tmpl.is_array() || tmpl.empty()) {
        throw ConfigError(where + ": expected a non-empty array");
      }
      DecompositionRule rule;
      for (std::size_t i = 0; i < tmpl.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        const json& e = tmpl[i];
        require_keys(e, {"kind", "angle", "operand_roles"}, w);
        if (!e.contains("kind") || !e["kind"].is_string()) throw ConfigError(w + ": missing kind");
        TemplateGate tg;
        tg.kind = read_kind(e["kind"].get<std::string>(), w);
        if (!is_native(tg.kind)) {
          throw ConfigError(w + ": template references non-native kind '" +
                            e["kind"].get<std::string>() + "'");
        }
        if (e.contains("angle")) tg.angle = read_number(e["angle"], w + ".angle");
        if (!e.contains("operand_roles") || !e["operand_roles"].is_array()) {
          throw ConfigError(w + ": missing operand_roles");
        }
        for (const json& r : e["operand_roles"]) {
          if (!r.is_number_integer()) throw ConfigError(w + ": operand role must be an integer");
          int role = r.get<int>();
          if (role < 0 || role >= arity(src)) {
            throw ConfigError(w + ": operand role " + std::to_string(role) + " out of range");
          }
          tg.roles.push_back(role);
        }
        if (static_cast<int>(tg.roles.size()) != arity(tg.kind)) {
          throw ConfigError(w + ": wrong number of operand roles");
        }
        if (tg.roles.size() == 2 && tg.roles[0] == tg.roles[1]) {
          throw ConfigError(w + ": two-qubit template needs distinct roles");
        }
        rule.push_back(std::move(tg));
      }
      cfg.decompositions[src] = std::move(rule);
    }
  }
  return cfg;
}

/// The fidelity/seed part of a config, as stored next to compiled schedules.
inline nlohmann::json fidelity_config_to_json(const ArchConfig& c) {
  auto f = [](const FidelityParams& p) { return nlohmann::json{{"mean", p.mean}, {"std", p.std}}; };
  return {{"seed", c.seed},
          {"fidelities",
           {{"single_qubit", f(c.single_qubit)}, {"shuttle", f(c.shuttle)}, {"sqswap", f(c.sqswap)}}}};
}

}  // namespace xbar
