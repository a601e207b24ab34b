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
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "xbar/config.hpp"
#include "xbar/crossbar.hpp"
#include "xbar/errors.hpp"
#include "xbar/ir.hpp"
#include "xbar/scheduler.hpp"

namespace xbar {

enum class FidelityClass { SingleQubit = 0, Shuttle = 1, Sqswap = 2 };

/// Per-class, per-site gate fidelities.
class FidelityMap {
 public:
  FidelityMap() = default;
  explicit FidelityMap(int side)
      : side_(side), values_(3 * static_cast<std::size_t>(side) * side, 1.0) {}

  int side() const { return side_; }

  double at(FidelityClass c, Site s) const {
    if (s.x < 0 || s.y < 0 || s.x >= side_ || s.y >= side_) {
      throw InternalError("fidelity lookup outside the grid");
    }
    return values_[index(c, s)];
  }
  void set(FidelityClass c, Site s, double v) { values_[index(c, s)] = v; }

 private:
  std::size_t index(FidelityClass c, Site s) const {
    return (static_cast<std::size_t>(c) * side_ + s.y) * side_ + s.x;
  }

  int side_ = 0;
  std::vector<double> values_;
};

/// Draws every (site, class) from a normal distribution around the class
/// mean, sites in row-major order from the bottom row, classes in the order
/// single_qubit, shuttle, sqswap. Values are clamped to (0, 1].
inline FidelityMap build_fidelity_map(int side, const ArchConfig& cfg) {
  FidelityMap m(side);
  std::mt19937_64 rng(cfg.seed);
  const FidelityParams* params[] = {&cfg.single_qubit, &cfg.shuttle, &cfg.sqswap};
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      for (int c = 0; c < 3; ++c) {
        const FidelityParams& p = *params[c];
        double v = p.mean;
        if (p.std > 0) v = std::normal_distribution<double>(p.mean, p.std)(rng);
        v = std::clamp(v, std::numeric_limits<double>::min(), 1.0);
        m.set(static_cast<FidelityClass>(c), {x, y}, v);
      }
  return m;
}

/// Estimated success probability: product of the fidelity of every
/// instruction at the site it acts on. Shuttles count at their destination,
/// a sqswap at its lower site, and a semi-global pulse once for every qubit
/// in the addressed parity.
inline double esp(const Schedule& s, const FidelityMap& fmap) {
  Grid g = s.initial_grid();
  double p = 1.0;
  for (const Cycle& c : s.cycles) {
    for (const Instruction& in : c.instructions) {
      if (is_shuttle(in.kind)) {
        p *= fmap.at(FidelityClass::Shuttle, step(g.site_of(in.q0), shuttle_direction(in)));
      } else if (in.kind == InstrKind::SQSWAP) {
        Site a = g.site_of(in.q0), b = g.site_of(in.q1);
        p *= fmap.at(FidelityClass::Sqswap, a.y <= b.y ? a : b);
      } else {
        for (QubitId q : g.qubits_in(in.parity)) p *= fmap.at(FidelityClass::SingleQubit, g.site_of(q));
      }
    }
    g = apply_cycle(std::move(g), c);
  }
  return p;
}

struct MetricsReport {
  std::string name;
  int n_qubits = 0;
  std::size_t n_decomposed = 0;
  std::size_t n_final = 0;
  double gate_overhead_pct = 0.0;
  int d_dependency = 0;
  int d_final = 0;
  double depth_overhead_pct = 0.0;
  double esp = 1.0;
  double compile_ms = 0.0;
  CountsByType counts;
};

inline MetricsReport overhead_report(const Circuit& decomposed, const Schedule& s,
                                     const FidelityMap& fmap, double compile_ms = 0.0) {
  if (decomposed.gates.empty()) throw CircuitError("empty circuit");
  MetricsReport r;
  r.name = decomposed.name;
  r.n_qubits = decomposed.n_qubits;
  r.n_decomposed = decomposed.gates.size();
  r.n_final = s.n_instructions();
  r.gate_overhead_pct = 100.0 * (static_cast<double>(r.n_final) - static_cast<double>(r.n_decomposed)) /
                        static_cast<double>(r.n_decomposed);
  r.d_dependency = dependency_depth(decomposed);
  r.d_final = static_cast<int>(s.cycles.size());
  r.depth_overhead_pct = 100.0 * (r.d_final - r.d_dependency) / r.d_dependency;
  r.esp = esp(s, fmap);
  r.compile_ms = compile_ms;
  r.counts = count_by_type(decomposed);
  return r;
}

inline nlohmann::json to_json(const MetricsReport& r) {
  return {{"name", r.name},
          {"n_qubits", r.n_qubits},
          {"n_decomposed", r.n_decomposed},
          {"n_final", r.n_final},
          {"gate_overhead_pct", r.gate_overhead_pct},
          {"d_dependency", r.d_dependency},
          {"d_final", r.d_final},
          {"depth_overhead_pct", r.depth_overhead_pct},
          {"esp", r.esp},
          {"compile_ms", r.compile_ms},
          {"counts",
           {{"n_xy", r.counts.n_xy},
            {"n_z", r.counts.n_z},
            {"n_twoq", r.counts.n_twoq},
            {"n_total", r.counts.n_total}}}};
}

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "name",  "n_qubits",     "n_decomposed", "n_final",    "gate_oh_pct",          "d_dep",
      "d_final", "depth_oh_pct", "esp",        "compile_ms", "twoq_pct_post_decomp", "xy_pct_post_decomp"};
  return cols;
}

inline std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

namespace metrics_detail {
inline std::string num(double v, const char* fmt = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}
}  // namespace metrics_detail

/// CSV row in csv_columns() order. Percent columns use the share-of-total
/// convention.
inline std::string csv_row(const MetricsReport& r) {
  using metrics_detail::num;
  return r.name + "," + std::to_string(r.n_qubits) + "," + std::to_string(r.n_decomposed) + "," +
         std::to_string(r.n_final) + "," + num(r.gate_overhead_pct) + "," +
         std::to_string(r.d_dependency) + "," + std::to_string(r.d_final) + "," +
         num(r.depth_overhead_pct) + "," + num(r.esp, "%.10g") + "," + num(r.compile_ms, "%.3f") +
         "," + num(r.counts.twoq_share_pct()) + "," + num(r.counts.xy_share_pct());
}

}  // namespace xbar
