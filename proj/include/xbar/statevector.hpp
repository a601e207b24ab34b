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
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "xbar/circuit.hpp"
#include "xbar/errors.hpp"

namespace xbar {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;   // row-major
using Mat4 = std::array<cplx, 16>;  // row-major, basis index 2*bit(a) + bit(b)

inline Mat2 rx_matrix(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
}
inline Mat2 ry_matrix(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
}
inline Mat2 rz_matrix(double t) {
  return {std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2)};
}

inline Mat4 sqswap_matrix() {
  const cplx p(0.5, 0.5), m(0.5, -0.5);
  return {1, 0, 0, 0,  //
          0, p, m, 0,  //
          0, m, p, 0,  //
          0, 0, 0, 1};
}

/// Unitary of a single-qubit gate kind (front-end kinds included).
inline Mat2 gate_matrix_1q(const Gate& g) {
  using std::numbers::pi;
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::RX: return rx_matrix(g.angle);
    case GateKind::RY: return ry_matrix(g.angle);
    case GateKind::RZ: return rz_matrix(g.angle);
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, cplx(0, -1), cplx(0, 1), 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::S: return {1, 0, 0, cplx(0, 1)};
    case GateKind::SDG: return {1, 0, 0, cplx(0, -1)};
    case GateKind::T: return {1, 0, 0, std::polar(1.0, pi / 4)};
    case GateKind::TDG: return {1, 0, 0, std::polar(1.0, -pi / 4)};
    default: throw InternalError("not a single-qubit gate: " + std::string(gate_name(g.kind)));
  }
}

/// Unitary of a two-qubit gate kind; operand 0 is the high bit.
inline Mat4 gate_matrix_2q(const Gate& g) {
  switch (g.kind) {
    case GateKind::SQSWAP: return sqswap_matrix();
    case GateKind::CNOT:
      return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    case GateKind::CZ:
      return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    default: throw InternalError("not a two-qubit gate: " + std::string(gate_name(g.kind)));
  }
}

/// Dense state vector; qubit q is bit q of the basis index.
class StateVector {
 public:
  explicit StateVector(int n_qubits)
      : n_(n_qubits), amp_(std::size_t{1} << n_qubits, cplx(0, 0)) {
    amp_[0] = 1.0;
  }

  /// Tensor product of one random pure state per qubit.
  static StateVector random_product(int n_qubits, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    StateVector sv(n_qubits);
    sv.amp_.assign(sv.amp_.size(), cplx(1, 0));
    for (int q = 0; q < n_qubits; ++q) {
      double theta = std::acos(1.0 - 2.0 * u(rng));
      double phi = 2.0 * std::numbers::pi * u(rng);
      cplx a0(std::cos(theta / 2), 0), a1 = std::polar(std::sin(theta / 2), phi);
      for (std::size_t i = 0; i < sv.amp_.size(); ++i) sv.amp_[i] *= ((i >> q) & 1) ? a1 : a0;
    }
    return sv;
  }

  int n_qubits() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  void apply(const Mat2& m, int q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & bit) continue;
      cplx a = amp_[i], b = amp_[i | bit];
      amp_[i] = m[0] * a + m[1] * b;
      amp_[i | bit] = m[2] * a + m[3] * b;
    }
  }

  void apply(const Mat4& m, int qa, int qb) {
    const std::size_t ba = std::size_t{1} << qa, bb = std::size_t{1} << qb;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & (ba | bb)) continue;
      const std::size_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
      cplx v[4];
      for (int r = 0; r < 4; ++r) v[r] = amp_[idx[r]];
      for (int r = 0; r < 4; ++r) {
        cplx acc = 0;
        for (int c = 0; c < 4; ++c) acc += m[4 * r + c] * v[c];
        amp_[idx[r]] = acc;
      }
    }
  }

  void apply(const Gate& g) {
    if (g.kind == GateKind::MEASURE) throw InternalError("cannot simulate measurement");
    if (g.arity() == 1) {
      apply(gate_matrix_1q(g), g.qubits[0]);
    } else {
      apply(gate_matrix_2q(g), g.qubits[0], g.qubits[1]);
    }
  }

  void apply(const Circuit& c) {
    for (const Gate& g : c.gates) apply(g);
  }

  cplx inner(const StateVector& o) const {
    cplx acc = 0;
    for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::conj(amp_[i]) * o.amp_[i];
    return acc;
  }

  /// |<this|o>|^2.
  double overlap(const StateVector& o) const { return std::norm(inner(o)); }

  double probability(std::size_t basis) const { return std::norm(amp_[basis]); }

 private:
  int n_;
  std::vector<cplx> amp_;
};

}  // namespace xbar
