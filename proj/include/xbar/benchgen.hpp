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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "xbar/circuit.hpp"
#include "xbar/errors.hpp"

namespace xbar {

/// `twoq_pct` is the number of two-qubit gates relative to single-qubit
/// gates, times 100 (50 means one two-qubit gate per two single-qubit ones).
struct BenchSpec {
  int n_qubits = 2;
  int n_gates = 0;
  double twoq_pct = 0.0;
  std::uint64_t seed = 1;
};

struct BenchCounts {
  int n_twoq = 0;
  int n_xy = 0;
  int n_z = 0;
};

/// Closed-form gate counts of a random uniform circuit.
inline BenchCounts bench_counts(const BenchSpec& spec) {
  BenchCounts c;
  c.n_twoq = static_cast<int>(std::llround(spec.n_gates * spec.twoq_pct / (100.0 + spec.twoq_pct)));
  int rest = spec.n_gates - c.n_twoq;
  c.n_z = rest / 2;
  c.n_xy = rest - c.n_z;
  return c;
}

inline std::string bench_name(const BenchSpec& s) {
  char p[32];
  std::snprintf(p, sizeof p, "%g", s.twoq_pct);
  return "rand_n" + std::to_string(s.n_qubits) + "_g" + std::to_string(s.n_gates) + "_p" + p +
         "_s" + std::to_string(s.seed);
}

/// Random circuit over RX/RY, RZ and SQSWAP with the proportions of `spec`.
/// Kinds are shuffled, operands drawn uniformly without replacement and
/// angles uniformly in (0, 2*pi).
inline Circuit gen_random_uniform(const BenchSpec& spec) {
  if (spec.n_qubits < 1) throw CircuitError("benchmark needs at least one qubit");
  if (spec.n_gates < 0) throw CircuitError("negative gate count");
  if (!(spec.twoq_pct >= 0)) throw CircuitError("two-qubit percentage must be non-negative");
  const BenchCounts counts = bench_counts(spec);
  if (counts.n_twoq > 0 && spec.n_qubits < 2) {
    throw CircuitError("two-qubit gates need at least two qubits");
  }

  enum class Cls { XY, Z, TWOQ };
  std::vector<Cls> kinds;
  kinds.insert(kinds.end(), counts.n_xy, Cls::XY);
  kinds.insert(kinds.end(), counts.n_z, Cls::Z);
  kinds.insert(kinds.end(), counts.n_twoq, Cls::TWOQ);

  std::mt19937_64 rng(spec.seed);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  std::uniform_int_distribution<int> qubit(0, spec.n_qubits - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);
  auto draw_angle = [&] {
    double a;
    do a = angle(rng);
    while (a == 0.0);
    return a;
  };

  Circuit c;
  c.name = bench_name(spec);
  c.n_qubits = spec.n_qubits;
  c.gates.reserve(kinds.size());
  for (Cls k : kinds) {
    switch (k) {
      case Cls::XY: {
        bool x = coin(rng);
        QubitId q = qubit(rng);
        c.gates.push_back(x ? Gate::rx(q, draw_angle()) : Gate::ry(q, draw_angle()));
        break;
      }
      case Cls::Z: {
        QubitId q = qubit(rng);
        c.gates.push_back(Gate::rz(q, draw_angle()));
        break;
      }
      case Cls::TWOQ: {
        QubitId a = qubit(rng);
        QubitId b = std::uniform_int_distribution<int>(0, spec.n_qubits - 2)(rng);
        if (b >= a) ++b;
        c.gates.push_back(Gate::sqswap(a, b));
        break;
      }
    }
  }
  return c;
}

/// Bernstein-Vazirani over n_qubits - 1 data qubits and one ancilla (the
/// last qubit). `secret[i]` is the bit of data qubit i.
inline Circuit gen_bernstein_vazirani(int n_qubits, const std::string& secret) {
  if (n_qubits < 2) throw CircuitError("Bernstein-Vazirani needs at least two qubits");
  if (static_cast<int>(secret.size()) != n_qubits - 1) {
    throw CircuitError("secret must have " + std::to_string(n_qubits - 1) + " bits, got " +
                       std::to_string(secret.size()));
  }
  if (secret.find_first_not_of("01") != std::string::npos) {
    throw CircuitError("secret must consist of 0 and 1");
  }
  const QubitId anc = n_qubits - 1;
  Circuit c;
  c.name = "bv_n" + std::to_string(n_qubits);
  c.n_qubits = n_qubits;
  for (QubitId q = 0; q < anc; ++q) c.gates.push_back(Gate::one(GateKind::H, q));
  c.gates.push_back(Gate::one(GateKind::X, anc));
  c.gates.push_back(Gate::one(GateKind::H, anc));
  for (QubitId q = 0; q < anc; ++q)
    if (secret[q] == '1') c.gates.push_back(Gate::cnot(q, anc));
  for (QubitId q = 0; q < anc; ++q) c.gates.push_back(Gate::one(GateKind::H, q));
  return c;
}

}  // namespace xbar
