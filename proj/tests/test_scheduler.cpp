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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "xbar/benchgen.hpp"
#include "xbar/scheduler.hpp"
#include "xbar/verifier.hpp"

namespace {

using namespace xbar;
using std::numbers::pi;

Circuit make(int n, std::vector<Gate> gates) {
  Circuit c;
  c.name = "t";
  c.n_qubits = n;
  c.gates = std::move(gates);
  return c;
}

std::size_t instructions(const Schedule& s) { return s.n_instructions(); }

// Pass 1 rebuilt from the all-pairs levels: per level, RZ and SQSWAP gates
// stand alone, RX/RY gates group by kind and exact angle, and units are
// ordered by their first gate.
std::vector<std::vector<int>> ideal_oracle(const Circuit& c) {
  auto lv = oracle::asap_bruteforce(c);
  int depth = lv.empty() ? 0 : *std::max_element(lv.begin(), lv.end());
  std::vector<std::vector<int>> out;
  for (int l = 1; l <= depth; ++l) {
    std::vector<std::vector<int>> units;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      if (lv[i] != l) continue;
      const Gate& g = c.gates[i];
      bool placed = false;
      if (g.kind == GateKind::RX || g.kind == GateKind::RY) {
        for (auto& u : units) {
          const Gate& h = c.gates[u.front()];
          if (h.kind == g.kind && h.angle == g.angle) {
            u.push_back(static_cast<int>(i));
            placed = true;
            break;
          }
        }
      }
      if (!placed) units.push_back({static_cast<int>(i)});
    }
    for (auto& u : units) out.push_back(u);
  }
  return out;
}

TEST(Pass1, MatchesGroupingOracle) {
  std::mt19937_64 rng(8);
  const double angles[] = {0.5, 1.0, pi};
  for (int trial = 0; trial < 500; ++trial) {
    Circuit c;
    c.n_qubits = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < 25; ++i) {
      int a = static_cast<int>(rng() % c.n_qubits);
      int b = static_cast<int>((a + 1 + rng() % (c.n_qubits - 1)) % c.n_qubits);
      double t = angles[rng() % 3];
      switch (rng() % 4) {
        case 0: c.gates.push_back(Gate::rx(a, t)); break;
        case 1: c.gates.push_back(Gate::ry(a, t)); break;
        case 2: c.gates.push_back(Gate::rz(a, t)); break;
        default: c.gates.push_back(Gate::sqswap(a, b)); break;
      }
    }
    auto units = plan_ideal_cycles(c);
    auto expect = ideal_oracle(c);
    ASSERT_EQ(units.size(), expect.size());
    for (std::size_t i = 0; i < units.size(); ++i) EXPECT_EQ(units[i].gates, expect[i]);
  }
}

TEST(Pass1, RejectsFrontEndGates) {
  EXPECT_THROW(plan_ideal_cycles(make(2, {Gate::cnot(0, 1)})), CircuitError);
}

// Overhead constants of the four micro-circuits.
TEST(Overhead, LoneZ) {
  Schedule s = schedule_integrated(make(3, {Gate::rz(0, 0.3)}));
  EXPECT_EQ(instructions(s), 2u);
  EXPECT_EQ(s.cycles.size(), 2u);
}

TEST(Overhead, LoneXWithSpectators) {
  // qubits 0 and 1 share the even columns; rotating only qubit 0 needs the
  // four-step compensation
  for (GateKind k : {GateKind::RX, GateKind::RY}) {
    Schedule s = schedule_integrated(make(3, {Gate::one(k, 0, 0.3)}));
    EXPECT_EQ(instructions(s), 4u);
    EXPECT_EQ(s.cycles.size(), 4u);
  }
}

TEST(Overhead, DiagonalTwoQubitGate) {
  Schedule s = schedule_integrated(make(3, {Gate::sqswap(0, 2)}));  // (0,0) and (1,1)
  EXPECT_EQ(instructions(s), 3u);
  EXPECT_EQ(s.cycles.size(), 3u);
}

TEST(Overhead, OneShuttleSwap) {
  Schedule s = schedule_integrated(make(5, {Gate::sqswap(0, 4)}));  // (0,0) and (2,2)
  EXPECT_EQ(instructions(s), 3u + 4u);
  EXPECT_EQ(s.cycles.size(), 3u + 2u);
}

TEST(Overhead, IsolatedGatesScaleExactly) {
  // k isolated Z gates: 100 %; k diagonal-adjacent two-qubit gates: 200 %
  for (int k = 1; k <= 6; ++k) {
    std::vector<Gate> zs, tq;
    for (int i = 0; i < k; ++i) zs.push_back(Gate::rz(i % 5, 0.1 * (i + 1)));
    for (int i = 0; i < k; ++i) tq.push_back(Gate::sqswap(0, 2));
    EXPECT_EQ(instructions(schedule_integrated(make(5, zs))), 2u * k);
    EXPECT_EQ(instructions(schedule_integrated(make(5, tq))), 3u * k);
  }
}

TEST(Split, WholeBlockFastPath) {
  Circuit c = make(8, {Gate::rz(0, 0.1), Gate::rz(6, 0.2)});
  Grid g = initial_placement(c);
  SplitResult r = split_cycle(g, {0, 1}, z_builder(c));
  EXPECT_EQ(r.rounds, 1);
  ASSERT_EQ(r.parts.size(), 1u);
}

TEST(Split, ConflictingZGatesAreDeferred) {
  // (0,0) must go right and (2,0) left: same destination (1,0)
  Circuit c = make(8, {Gate::rz(0, 0.1), Gate::rz(1, 0.2)});
  Grid g = initial_placement(c);
  SplitResult r = split_cycle(g, {0, 1}, z_builder(c));
  EXPECT_EQ(r.rounds, 2);
  ASSERT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(r.parts[0].sources, (std::vector<int>{0}));
  EXPECT_EQ(r.parts[1].sources, (std::vector<int>{1}));
}

// Parts partition the input and every part is legal under the physical
// model; when the whole set is legal there is a single round.
TEST(Split, PartsAreLegalSubsets) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 20);
    Circuit c;
    c.n_qubits = n;
    std::vector<QubitId> qs(n);
    for (int q = 0; q < n; ++q) qs[q] = q;
    std::shuffle(qs.begin(), qs.end(), rng);
    const bool z = rng() % 2;
    Grid g = initial_placement(c);
    const Parity par = rng() % 2 ? Parity::Odd : Parity::Even;
    std::vector<int> gates;
    for (int i = 0; i < 1 + static_cast<int>(rng() % std::min(n, 8)); ++i) {
      QubitId q = qs[i];
      if (!z && parity_of(g.site_of(q)) != par) continue;
      c.gates.push_back(z ? Gate::rz(q, 0.3) : Gate::rx(q, 0.3));
      gates.push_back(static_cast<int>(c.gates.size()) - 1);
    }
    if (gates.empty()) continue;
    const BlockBuilder build = z ? z_builder(c) : xy_builder(c);

    auto legal = [&](const Grid& start, const RoutedBlock& b) {
      Grid cur = start;
      for (const Cycle& cy : b.steps) {
        if (!is_ac(cy.instructions.front().kind) &&
            oracle::judge(oracle::occupancy(cur.side(), cur.positions()), cy.instructions).bad()) {
          return false;
        }
        if (is_ac(cy.instructions.front().kind)) {
          std::set<Parity> seen;
          for (const auto& in : cy.instructions)
            if (!seen.insert(in.parity).second) return false;
        }
        cur = apply_cycle(std::move(cur), cy);
      }
      return true;
    };

    SplitResult r = split_cycle(g, gates, build);
    std::multiset<int> covered;
    Grid cur = g;
    for (const RoutedBlock& part : r.parts) {
      EXPECT_TRUE(legal(cur, part)) << "trial " << trial;
      for (int s : part.sources) covered.insert(s);
      for (const Cycle& cy : part.steps) cur = apply_cycle(std::move(cur), cy);
    }
    EXPECT_EQ(covered, std::multiset<int>(gates.begin(), gates.end()));
    EXPECT_TRUE(cur.is_idle());
    if (legal(g, build(g, gates))) {
      EXPECT_EQ(r.rounds, 1);
    }
  }
}

TEST(Schedule, RandomCircuitsReplayCleanly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    BenchSpec spec{2 + static_cast<int>(rng() % 30), 1 + static_cast<int>(rng() % 150),
                   static_cast<double>(rng() % 101), rng()};
    Circuit c = gen_random_uniform(spec);
    Schedule s = schedule_integrated(c);
    VerifyReport v = replay_verify(s);
    EXPECT_TRUE(v.replay_ok) << bench_name(spec);
    EXPECT_EQ(s.positions.size(), s.cycles.size());
    EXPECT_FALSE(s.block_ends.empty());
    EXPECT_EQ(s.block_ends.back(), static_cast<int>(s.cycles.size()));
    // every source gate is served
    std::set<int> served;
    for (const Cycle& cy : s.cycles)
      for (const Instruction& in : cy.instructions) served.insert(in.sources.begin(), in.sources.end());
    EXPECT_EQ(served.size(), c.gates.size());
  }
}

TEST(Schedule, Deterministic) {
  Circuit c = gen_random_uniform({20, 400, 50, 9});
  Schedule a = schedule_integrated(c), b = schedule_integrated(c);
  EXPECT_TRUE(a == b);
}

TEST(Schedule, StartsFromIdleOnly) {
  Circuit c = make(3, {Gate::rz(0, 1)});
  Grid g(3, {{0, 1}, {2, 0}, {1, 1}});
  EXPECT_THROW(schedule_integrated(c, g), InternalError);
}

}  // namespace
