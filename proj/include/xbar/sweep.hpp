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
#include <atomic>
#include <cstdint>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "xbar/benchgen.hpp"
#include "xbar/config.hpp"
#include "xbar/errors.hpp"
#include "xbar/metrics.hpp"
#include "xbar/pipeline.hpp"

namespace xbar {

/// Inclusive integer range `start:stop:step`.
struct Range {
  int start = 0;
  int stop = 0;
  int step = 1;

  std::vector<int> values() const {
    std::vector<int> v;
    for (int x = start; x <= stop; x += step) v.push_back(x);
    return v;
  }
};

/// Parses "a", "a:b" or "a:b:s".
inline Range parse_range(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  try {
    while (true) {
      std::size_t colon = text.find(':', pos);
      std::string tok = text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ConfigError("");
      if (colon == std::string::npos) break;
      pos = colon + 1;
    }
  } catch (const std::exception&) {
    throw ConfigError("bad range '" + text + "', expected start:stop:step");
  }
  if (parts.size() > 3) throw ConfigError("bad range '" + text + "', expected start:stop:step");
  Range r{parts[0], parts.size() > 1 ? parts[1] : parts[0], parts.size() > 2 ? parts[2] : 1};
  if (r.step <= 0) throw ConfigError("range step must be positive in '" + text + "'");
  if (r.stop < r.start) throw ConfigError("empty range '" + text + "'");
  return r;
}

struct SweepSpec {
  Range qubits;
  Range gates;
  Range twoq;
  int seeds = 1;
  int jobs = 1;
  bool verify = true;
};

struct SweepRow {
  BenchSpec spec;
  MetricsReport metrics;
  std::string error;
};

/// Grid points in deterministic order: qubits, gates, twoq, seed index.
inline std::vector<BenchSpec> sweep_points(const SweepSpec& s, std::uint64_t base_seed) {
  std::vector<BenchSpec> out;
  for (int n : s.qubits.values())
    for (int g : s.gates.values())
      for (int p : s.twoq.values())
        for (int k = 0; k < s.seeds; ++k)
          out.push_back({n, g, static_cast<double>(p), base_seed + static_cast<std::uint64_t>(k)});
  return out;
}

/// Compiles one circuit per grid point. Failures are recorded in the row
/// and the sweep continues. Rows come back in grid order regardless of
/// `jobs`.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, const ArchConfig& cfg) {
  if (spec.seeds < 1) throw ConfigError("seeds per point must be positive");
  const auto points = sweep_points(spec, cfg.seed);
  std::vector<SweepRow> rows(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepRow& row = rows[i];
      row.spec = points[i];
      row.metrics.name = bench_name(points[i]);
      row.metrics.n_qubits = points[i].n_qubits;
      try {
        CompileResult r = compile_circuit(gen_random_uniform(points[i]), cfg, {spec.verify, 12});
        row.metrics = r.metrics;
        if (!r.ok()) row.error = "verification failed";
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << csv_header() << ",error\n";
  for (const SweepRow& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << csv_row(r.metrics) << "," << err << "\n";
  }
}

}  // namespace xbar
