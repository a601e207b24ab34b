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
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "xbar/crossbar.hpp"

namespace {

using namespace xbar;
using D = Direction;

// Eight qubits on the 4 x 4 checkerboard; ids follow the site order
// (0,0) (2,0) (1,1) (3,1) (0,2) (2,2) (1,3) (3,3).
Grid eight() { return grid_for(8); }

TEST(Grid, SideMatchesCountingOracle) {
  for (int n = 1; n <= 300; ++n) EXPECT_EQ(side_for(n), oracle::side_for(n)) << n;
  EXPECT_THROW(side_for(0), CircuitError);
}

TEST(Grid, CheckerboardPlacementOrder) {
  for (int n : {1, 2, 5, 8, 13, 50}) {
    Grid g = grid_for(n);
    auto expect = oracle::checkerboard(oracle::side_for(n));
    expect.resize(n);
    EXPECT_EQ(g.positions(), expect);
    EXPECT_TRUE(g.is_idle());
  }
}

TEST(Grid, MoveAndParityQueries) {
  Grid g = eight();
  EXPECT_EQ(g.at({1, 1}), 2);
  EXPECT_EQ(g.qubits_in(Parity::Odd), (std::vector<QubitId>{2, 3, 6, 7}));
  g.move(2, {0, 1});
  EXPECT_FALSE(g.is_idle());
  EXPECT_EQ(g.at({1, 1}), -1);
  EXPECT_EQ(g.qubits_in(Parity::Even), (std::vector<QubitId>{0, 1, 2, 4, 5}));
  EXPECT_THROW(g.move(2, {0, 0}), InternalError);
  EXPECT_THROW(g.move(2, {-1, 1}), InternalError);
}

// The single left shuttle of the qubit at (1,1). It crosses CL_0; the other
// barriers of (1,1) and (0,1) stay up. The mover needs QL_-1 > QL_0. On
// CL_0 the qubits at (0,0), (0,2) and (1,3) face empty dots and must hold:
// QL_0 > QL_1, QL_-2 > QL_-1, QL_-2 > QL_-3.
TEST(Requirements, SingleLeftShuttle) {
  SignalRequirements r = shuttle_requirements(eight(), 2, D::Left);
  EXPECT_EQ(r.lowered, (std::set<LineId>{LineId::cl(0)}));
  EXPECT_EQ(r.raised, (std::set<LineId>{LineId::cl(1), LineId::rl(0), LineId::rl(1)}));
  EXPECT_EQ(r.ql_gt(), (std::set<std::pair<int, int>>{{-2, -3}, {-2, -1}, {-1, 0}, {0, 1}}));
  int movers = 0;
  for (const auto& rel : r.relations) movers += rel.mover;
  EXPECT_EQ(movers, 1);
  EXPECT_TRUE(r.ql_equal.empty());
}

TEST(Requirements, SqswapNeedsEqualLines) {
  Grid g(3, {{1, 0}, {1, 1}});
  SignalRequirements r = sqswap_requirements(g, 0, 1);
  EXPECT_EQ(r.lowered, (std::set<LineId>{LineId::rl(0)}));
  EXPECT_EQ(r.raised, (std::set<LineId>{LineId::cl(0), LineId::cl(1), LineId::rl(1)}));
  ASSERT_EQ(r.ql_equal.size(), 1u);
  EXPECT_EQ(r.ql_equal[0], (std::pair<int, int>{1, 0}));
  EXPECT_THROW(sqswap_requirements(eight(), 0, 1), ConflictError);
}

TEST(Requirements, BlockedPaths) {
  Grid g = eight();
  try {
    shuttle_requirements(g, 0, D::Left);
    FAIL();
  } catch (const ConflictError& e) {
    EXPECT_EQ(e.kind(), ConflictKind::BLOCKED_PATH);
  }
  Grid h(3, {{0, 0}, {1, 0}});
  EXPECT_THROW(shuttle_requirements(h, 0, D::Right), ConflictError);
}

// Left shuttle at (1,1) with right shuttle at (2,2): the first needs
// QL_0 > QL_1 for the qubit at (0,0), the second needs QL_1 > QL_0 to move.
TEST(ParallelSet, OpposingShuttlesContradict) {
  std::vector<Instruction> set{Instruction::shuttle(2, D::Left), Instruction::shuttle(5, D::Right)};
  ConflictReport r = check_parallel_set(eight(), set);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.kind, ConflictKind::QL_CONTRADICTION);
  std::set<std::pair<int, int>> cyc(r.ql_cycle.begin(), r.ql_cycle.end());
  EXPECT_TRUE(cyc.count({0, 1}));
  EXPECT_TRUE(cyc.count({1, 0}));
  EXPECT_EQ(r.culprits, (std::vector<int>{0, 1}));
  // every reported edge lies on a cycle: the closure reaches back
  oracle::QlSystem sys{-3, 3, r.ql_cycle, {}};
  EXPECT_FALSE(oracle::ql_solve(sys).has_value());
}

TEST(ParallelSet, KindDoesNotDependOnOrder) {
  std::mt19937_64 rng(5);
  Grid g = eight();
  std::vector<Instruction> all;
  for (QubitId q = 0; q < 8; ++q)
    for (D d : {D::Left, D::Right, D::Up, D::Down}) all.push_back(Instruction::shuttle(q, d));
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Instruction> set;
    for (int k = 0; k < 3; ++k) set.push_back(all[rng() % all.size()]);
    ConflictReport a = check_parallel_set(g, set);
    std::shuffle(set.begin(), set.end(), rng);
    ConflictReport b = check_parallel_set(g, set);
    EXPECT_EQ(a.ok, b.ok);
    if (!a.ok && !b.ok) {
      EXPECT_EQ(a.kind, b.kind);
    }
  }
}

// A qubit shuttles up across RL_1 while another column holds a pair
// straddling RL_1.
TEST(ParallelSet, VerticalUnwantedInteraction) {
  Grid g(4, {{0, 1}, {2, 1}, {2, 2}});
  ConflictReport r = check_parallel_set(g, {Instruction::shuttle(0, D::Up)});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.kind, ConflictKind::UNWANTED_INTERACTION);
  EXPECT_TRUE(oracle::judge(oracle::occupancy(4, g.positions()), {Instruction::shuttle(0, D::Up)}).interaction);
}

TEST(ParallelSet, HorizontalUnwantedInteraction) {
  Grid g(4, {{1, 0}, {1, 2}, {2, 2}});
  ConflictReport r = check_parallel_set(g, {Instruction::shuttle(0, D::Right)});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.kind, ConflictKind::UNWANTED_INTERACTION);
}

TEST(ParallelSet, IntendedSqswapPairsDoNotInteract) {
  Grid g(4, {{1, 0}, {1, 1}, {3, 0}, {3, 1}});
  std::vector<Instruction> set{Instruction::sqswap(0, 1), Instruction::sqswap(2, 3)};
  EXPECT_TRUE(check_parallel_set(g, set).ok);
  EXPECT_FALSE(check_parallel_set(g, {Instruction::sqswap(0, 1)}).ok);
}

TEST(ParallelSet, BarrierClashAndBlockedPaths) {
  Grid g = eight();
  ConflictReport r = check_parallel_set(g, {Instruction::shuttle(2, D::Left), Instruction::shuttle(2, D::Right)});
  EXPECT_EQ(r.kind, ConflictKind::BLOCKED_PATH);
  r = check_parallel_set(g, {Instruction::shuttle(0, D::Right), Instruction::shuttle(1, D::Left)});
  EXPECT_EQ(r.kind, ConflictKind::BLOCKED_PATH);  // same destination (1,0)
  // (2,0) up lowers RL_0, which the left shuttle of (1,1) needs raised
  r = check_parallel_set(g, {Instruction::shuttle(2, D::Left), Instruction::shuttle(1, D::Up)});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.kind, ConflictKind::BARRIER_CLASH);
}

TEST(ParallelSet, SemiGlobalPulses) {
  Grid g = eight();
  EXPECT_TRUE(check_parallel_set(g, {Instruction::sg_rot(Parity::Even, Axis::X, 1)}).ok);
  EXPECT_TRUE(check_parallel_set(g, {Instruction::sg_rot(Parity::Even, Axis::X, 1),
                                     Instruction::sg_rot(Parity::Odd, Axis::Y, 2)})
                  .ok);
  EXPECT_EQ(check_parallel_set(g, {Instruction::sg_rot(Parity::Even, Axis::X, 1),
                                   Instruction::sg_rot(Parity::Even, Axis::Y, 2)})
                .kind,
            ConflictKind::BARRIER_CLASH);
  EXPECT_EQ(check_parallel_set(g, {Instruction::sg_rot(Parity::Even, Axis::X, 1), Instruction::shuttle(2, D::Left)})
                .kind,
            ConflictKind::MIXED_TYPES);
}

TEST(ApplyCycle, MovesAreSimultaneousFromThePreCycleGrid) {
  Grid g(3, {{0, 0}, {1, 0}});
  // qubit 1 leaves (1,0) while qubit 0 moves into it: not allowed
  EXPECT_THROW(apply_cycle(g, std::vector<Instruction>{Instruction::shuttle(1, D::Right),
                                                       Instruction::shuttle(0, D::Right)}),
               ConflictError);
  Grid h = apply_cycle(g, std::vector<Instruction>{Instruction::shuttle(1, D::Up)});
  EXPECT_EQ(h.site_of(1), (Site{1, 1}));
  Grid k = apply_op(g, Instruction::zsh(0, 0.5, D::Up));
  EXPECT_EQ(k.site_of(0), (Site{0, 1}));
}

// Random occupancies and random parallel sets against the physical model.
TEST(ParallelSet, AgreesWithPhysicalModel) {
  std::mt19937_64 rng(2026);
  int judged = 0, flagged = 0;
  for (int trial = 0; judged < 10000; ++trial) {
    ASSERT_LT(trial, 1000000);
    const int side = 2 + static_cast<int>(rng() % 7);  // 2..8
    std::vector<Site> all;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) all.push_back({x, y});
    std::shuffle(all.begin(), all.end(), rng);
    const int n = 1 + static_cast<int>(rng() % std::max<std::size_t>(1, all.size() / 2));
    std::vector<Site> sites(all.begin(), all.begin() + n);
    Grid g(side, sites);

    std::vector<Instruction> set;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      QubitId q = static_cast<QubitId>(rng() % n);
      Site s = sites[q];
      if (rng() % 5 == 0) {
        for (D d : {D::Up, D::Down}) {
          QubitId p = g.at(step(s, d));
          if (p >= 0) {
            set.push_back(Instruction::sqswap(q, p));
            break;
          }
        }
        if (!set.empty() && set.back().kind == InstrKind::SQSWAP) continue;
      }
      D d = static_cast<D>(rng() % 4);
      set.push_back(rng() % 3 == 0 ? Instruction::zsh(q, 0.1, d) : Instruction::shuttle(q, d));
    }

    oracle::Verdict v = oracle::judge(oracle::occupancy(side, sites), set);
    ConflictReport r = check_parallel_set(g, set);
    if (v.blocked) {
      EXPECT_FALSE(r.ok);
      EXPECT_EQ(r.kind, ConflictKind::BLOCKED_PATH);
      continue;
    }
    ++judged;
    // no false negatives
    if (v.bad()) {
      EXPECT_FALSE(r.ok) << "trial " << trial;
    }
    if (r.ok) {
      EXPECT_FALSE(v.bad());
      continue;
    }
    ++flagged;
    EXPECT_NE(r.kind, ConflictKind::BLOCKED_PATH) << "trial " << trial;
    if (r.kind == ConflictKind::UNWANTED_INTERACTION) {
      EXPECT_TRUE(v.interaction) << "trial " << trial;
    }
    if (r.kind == ConflictKind::QL_CONTRADICTION) {
      EXPECT_TRUE(v.unsatisfiable) << "trial " << trial;
    }
    if (r.kind == ConflictKind::BARRIER_CLASH) {
      EXPECT_TRUE(v.ambiguous) << "trial " << trial;
    }
  }
  EXPECT_GT(flagged, 1000);
}

// Topological order exists exactly when the closure has no cycle, and the
// order is a witness.
TEST(QlOrder, WitnessOrCycle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const int side = 1 + static_cast<int>(rng() % 8);
    const int span = 2 * side - 1;
    oracle::QlSystem sys{-(side - 1), side - 1, {}, {}};
    const int ne = static_cast<int>(rng() % (2 * span + 1));
    for (int e = 0; e < ne; ++e) {
      int a = sys.lo + static_cast<int>(rng() % span), b = sys.lo + static_cast<int>(rng() % span);
      if (rng() % 6 == 0) {
        sys.eq.push_back({a, b});
      } else if (a != b) {
        sys.gt.push_back({a, b});
      }
    }
    auto order = ql_order(side, std::span<const std::pair<int, int>>(sys.gt),
                          std::span<const std::pair<int, int>>(sys.eq));
    auto truth = oracle::ql_solve(sys);
    ASSERT_EQ(order.has_value(), truth.has_value()) << "trial " << trial;
    if (!order) continue;
    // earlier in the order = higher potential; merged lines share a value
    std::map<int, int> rank;
    for (std::size_t i = 0; i < order->size(); ++i) rank[(*order)[i]] = -static_cast<int>(i);
    // lines merged by equalities form classes; exactly one member is ordered
    std::map<int, int> value;
    for (int l = sys.lo; l <= sys.hi; ++l) {
      std::set<int> cls{l};
      for (bool grew = true; grew;) {
        grew = false;
        for (auto [a, b] : sys.eq) {
          if (cls.count(a) != cls.count(b)) {
            cls.insert(a);
            cls.insert(b);
            grew = true;
          }
        }
      }
      int ranked = 0, v = 0;
      for (int m : cls) {
        if (rank.count(m)) {
          ++ranked;
          v = rank[m];
        }
      }
      ASSERT_EQ(ranked, 1);
      value[l] = v;
    }
    EXPECT_TRUE(oracle::ql_witness_ok(sys, value)) << "trial " << trial;
  }
}

}  // namespace
