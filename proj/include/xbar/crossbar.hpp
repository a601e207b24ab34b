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
 * @file crossbar.hpp
 * @brief The N x N dot grid, its control lines and the legality check for
 * sets of instructions issued in one cycle.
 *
 * Control lines:
 *  - CL_i is the barrier between columns i and i+1,
 *  - RL_j is the barrier between rows j and j+1,
 *  - QL_k drives every site with x - y = k.
 *
 * The outer boundary of the grid is not a line; it is always raised.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xbar/errors.hpp"
#include "xbar/instruction.hpp"

namespace xbar {

/// Occupancy of the dot array and the qubit <-> site bijection.
class Grid {
 public:
  Grid() = default;
  explicit Grid(int side) : n_(side), occ_(static_cast<std::size_t>(side) * side, -1) {}

  /// A grid of side `side` with qubit i placed at `sites[i]`.
  Grid(int side, const std::vector<Site>& sites) : Grid(side) {
    for (std::size_t q = 0; q < sites.size(); ++q) place(static_cast<QubitId>(q), sites[q]);
  }

  int side() const { return n_; }
  int n_qubits() const { return static_cast<int>(pos_.size()); }

  bool in_grid(Site s) const { return s.x >= 0 && s.y >= 0 && s.x < n_ && s.y < n_; }

  /// Qubit at `s`, or -1 when empty or outside the grid.
  QubitId at(Site s) const { return in_grid(s) ? occ_[index(s)] : -1; }
  bool occupied(Site s) const { return at(s) >= 0; }

  bool has_qubit(QubitId q) const { return q >= 0 && q < n_qubits(); }
  Site site_of(QubitId q) const {
    if (!has_qubit(q)) throw InternalError("unknown qubit " + std::to_string(q));
    return pos_[q];
  }
  const std::vector<Site>& positions() const { return pos_; }

  /// Moves `q` to the empty in-grid site `to`.
  void move(QubitId q, Site to) {
    if (!has_qubit(q)) throw InternalError("unknown qubit " + std::to_string(q));
    if (!in_grid(to) || occupied(to)) {
      throw InternalError("cannot move qubit " + std::to_string(q) + " to (" +
                          std::to_string(to.x) + "," + std::to_string(to.y) + ")");
    }
    occ_[index(pos_[q])] = -1;
    occ_[index(to)] = q;
    pos_[q] = to;
  }

  /// Every occupied site lies on the checkerboard (x + y even).
  bool is_idle() const {
    return std::all_of(pos_.begin(), pos_.end(), [](Site s) { return (s.x + s.y) % 2 == 0; });
  }

  /// Occupied sites in row-major order, bottom row first.
  std::vector<Site> occupied_sites() const {
    std::vector<Site> out;
    for (int y = 0; y < n_; ++y)
      for (int x = 0; x < n_; ++x)
        if (occupied({x, y})) out.push_back({x, y});
    return out;
  }

  /// Qubits whose column has parity `p`, in increasing id order.
  std::vector<QubitId> qubits_in(Parity p) const {
    std::vector<QubitId> out;
    for (QubitId q = 0; q < n_qubits(); ++q)
      if (parity_of(pos_[q]) == p) out.push_back(q);
    return out;
  }

  bool operator==(const Grid& o) const { return n_ == o.n_ && pos_ == o.pos_; }

 private:
  std::size_t index(Site s) const { return static_cast<std::size_t>(s.y) * n_ + s.x; }

  void place(QubitId q, Site s) {
    if (!in_grid(s) || occupied(s)) throw InternalError("bad placement for qubit " + std::to_string(q));
    if (q != n_qubits()) throw InternalError("qubits must be placed in id order");
    pos_.push_back(s);
    occ_[index(s)] = q;
  }

  int n_ = 0;
  std::vector<QubitId> occ_;
  std::vector<Site> pos_;
};

/// Smallest N with ceil(N^2 / 2) >= n. A lone qubit still gets a 2 x 2
/// grid: a 1 x 1 array has no neighbour to shuttle into.
inline int side_for(int n_qubits) {
  if (n_qubits < 1) throw CircuitError("circuit needs at least one qubit");
  int n = 2;
  while ((n * n + 1) / 2 < n_qubits) ++n;
  return n;
}

/// Sites with x + y even, left to right within a row, rows bottom to top.
inline std::vector<Site> checkerboard_sites(int side) {
  std::vector<Site> out;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      if ((x + y) % 2 == 0) out.push_back({x, y});
  return out;
}

/// The trivial placement: qubit i on the i-th checkerboard site.
inline Grid grid_for(int n_qubits) {
  int side = side_for(n_qubits);
  auto sites = checkerboard_sites(side);
  sites.resize(static_cast<std::size_t>(n_qubits));
  return Grid(side, sites);
}

enum class LineFamily { CL, RL, QL };

struct LineId {
  LineFamily family = LineFamily::CL;
  int index = 0;

  auto operator<=>(const LineId&) const = default;

  static LineId cl(int i) { return {LineFamily::CL, i}; }
  static LineId rl(int j) { return {LineFamily::RL, j}; }
};

inline std::string to_string(LineId l) {
  static constexpr const char* names[] = {"CL_", "RL_", "QL_"};
  return names[static_cast<int>(l.family)] + std::to_string(l.index);
}

/// voltage(QL_hi) > voltage(QL_lo), imposed on behalf of `subject`.
struct QlRelation {
  int hi = 0;
  int lo = 0;
  QubitId subject = -1;
  bool mover = false;  // false: a neighbour that must stay put

  bool operator==(const QlRelation&) const = default;
};

/// Signals one DC instruction needs. `ql_equal` holds pairs of lines that
/// must sit at the same potential (the two sites of a sqswap).
struct SignalRequirements {
  std::set<LineId> lowered;
  std::set<LineId> raised;
  std::vector<QlRelation> relations;
  std::vector<std::pair<int, int>> ql_equal;

  /// All strict relations as (hi, lo) pairs.
  std::set<std::pair<int, int>> ql_gt() const {
    std::set<std::pair<int, int>> out;
    for (const auto& r : relations) out.insert({r.hi, r.lo});
    return out;
  }
};

enum class ConflictKind { QL_CONTRADICTION, BARRIER_CLASH, UNWANTED_INTERACTION, BLOCKED_PATH, MIXED_TYPES };

constexpr std::string_view conflict_kind_name(ConflictKind k) {
  switch (k) {
    case ConflictKind::QL_CONTRADICTION: return "QL_CONTRADICTION";
    case ConflictKind::BARRIER_CLASH: return "BARRIER_CLASH";
    case ConflictKind::UNWANTED_INTERACTION: return "UNWANTED_INTERACTION";
    case ConflictKind::BLOCKED_PATH: return "BLOCKED_PATH";
    case ConflictKind::MIXED_TYPES: return "MIXED_TYPES";
  }
  return "?";
}

/// Thrown when a single instruction is illegal on its own.
class ConflictError : public Error {
 public:
  ConflictError(ConflictKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ConflictKind kind() const noexcept { return kind_; }

 private:
  ConflictKind kind_;
};

struct ConflictReport {
  bool ok = true;
  ConflictKind kind = ConflictKind::BLOCKED_PATH;  // meaningful only when !ok
  std::vector<int> culprits;                      // sorted instruction indices
  std::vector<std::pair<int, int>> ql_cycle;      // (hi, lo) edges inside a cycle
  std::string detail;

  static ConflictReport conflict(ConflictKind k, std::vector<int> who, std::string detail) {
    std::sort(who.begin(), who.end());
    who.erase(std::unique(who.begin(), who.end()), who.end());
    ConflictReport r;
    r.ok = false;
    r.kind = k;
    r.culprits = std::move(who);
    r.detail = std::move(detail);
    return r;
  }
};

/// Direction of travel of a shuttle-family instruction.
inline Direction shuttle_direction(const Instruction& in) {
  switch (in.kind) {
    case InstrKind::SH_L: return Direction::Left;
    case InstrKind::SH_R: return Direction::Right;
    case InstrKind::SH_U: return Direction::Up;
    case InstrKind::SH_D: return Direction::Down;
    case InstrKind::ZSH:
    case InstrKind::ZSH_RET: return in.dir;
    default: throw InternalError("not a shuttle: " + std::string(instr_name(in.kind)));
  }
}

namespace crossbar_detail {

inline std::string site_str(Site s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

/// The barrier line between two adjacent in-grid sites.
inline LineId between(Site a, Site b) {
  if (a.y == b.y) return LineId::cl(std::min(a.x, b.x));
  return LineId::rl(std::min(a.y, b.y));
}

/// Barriers around `s` that are real lines (boundaries excluded).
inline void add_barriers(const Grid& g, Site s, std::set<LineId>& out) {
  if (s.x > 0) out.insert(LineId::cl(s.x - 1));
  if (s.x + 1 < g.side()) out.insert(LineId::cl(s.x));
  if (s.y > 0) out.insert(LineId::rl(s.y - 1));
  if (s.y + 1 < g.side()) out.insert(LineId::rl(s.y));
}

/// Relations keeping every other qubit next to `line` in place: a qubit
/// facing an empty site across the lowered line must sit on the higher QL.
inline void add_stay_puts(const Grid& g, LineId line, std::span<const QubitId> exclude,
                          SignalRequirements& req) {
  for (int t = 0; t < g.side(); ++t) {
    Site a = line.family == LineFamily::CL ? Site{line.index, t} : Site{t, line.index};
    Site b = line.family == LineFamily::CL ? Site{line.index + 1, t} : Site{t, line.index + 1};
    for (auto [s, across] : {std::pair{a, b}, std::pair{b, a}}) {
      QubitId q = g.at(s);
      if (q < 0 || g.occupied(across)) continue;
      if (std::find(exclude.begin(), exclude.end(), q) != exclude.end()) continue;
      req.relations.push_back({ql_index(s), ql_index(across), q, false});
    }
  }
}

}  // namespace crossbar_detail

/// Signals for moving `q` one site in direction `d`.
///
/// Throws ConflictError(BLOCKED_PATH) when the destination is outside the
/// grid or occupied.
inline SignalRequirements shuttle_requirements(const Grid& g, QubitId q, Direction d) {
  using namespace crossbar_detail;
  Site from = g.site_of(q);
  Site to = step(from, d);
  if (!g.in_grid(to)) {
    throw ConflictError(ConflictKind::BLOCKED_PATH,
                        "qubit " + std::to_string(q) + " cannot leave the grid at " + site_str(from));
  }
  if (g.occupied(to)) {
    throw ConflictError(ConflictKind::BLOCKED_PATH, "destination " + site_str(to) + " of qubit " +
                                                        std::to_string(q) + " is occupied");
  }
  SignalRequirements req;
  LineId crossed = between(from, to);
  req.lowered.insert(crossed);
  add_barriers(g, from, req.raised);
  add_barriers(g, to, req.raised);
  req.raised.erase(crossed);
  req.relations.push_back({ql_index(to), ql_index(from), q, true});
  const QubitId self[] = {q};
  add_stay_puts(g, crossed, self, req);
  return req;
}

/// Signals for a sqswap between vertically adjacent qubits `a` and `b`.
inline SignalRequirements sqswap_requirements(const Grid& g, QubitId a, QubitId b) {
  using namespace crossbar_detail;
  if (a == b) throw ConflictError(ConflictKind::BLOCKED_PATH, "sqswap needs two distinct qubits");
  Site sa = g.site_of(a), sb = g.site_of(b);
  if (sa.x != sb.x || std::abs(sa.y - sb.y) != 1) {
    throw ConflictError(ConflictKind::BLOCKED_PATH, "sqswap operands " + site_str(sa) + " and " +
                                                        site_str(sb) + " are not vertically adjacent");
  }
  SignalRequirements req;
  LineId shared = between(sa, sb);
  req.lowered.insert(shared);
  add_barriers(g, sa, req.raised);
  add_barriers(g, sb, req.raised);
  req.raised.erase(shared);
  req.ql_equal.push_back({ql_index(sa), ql_index(sb)});
  const QubitId pair[] = {a, b};
  add_stay_puts(g, shared, pair, req);
  return req;
}

/// Requirements of any DC instruction.
inline SignalRequirements requirements(const Grid& g, const Instruction& in) {
  if (in.kind == InstrKind::SQSWAP) return sqswap_requirements(g, in.q0, in.q1);
  if (is_shuttle(in.kind)) return shuttle_requirements(g, in.q0, shuttle_direction(in));
  throw InternalError("no DC requirements for " + std::string(instr_name(in.kind)));
}

namespace crossbar_detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

/// Strongly connected components (Tarjan). Returns component id per node.
inline std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (int w : adj[v]) {
      if (idx[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (idx[v] < 0) visit(v);
  return comp;
}

}  // namespace crossbar_detail

/// A topological order of QL indices consistent with `gt` (hi before lo),
/// or nullopt when the relations are cyclic. `equal` pairs are merged first.
inline std::optional<std::vector<int>> ql_order(int side, std::span<const std::pair<int, int>> gt,
                                                std::span<const std::pair<int, int>> equal = {}) {
  const int nodes = 2 * side + 1;
  crossbar_detail::UnionFind uf(nodes);
  for (auto [a, b] : equal) uf.join(a + side, b + side);
  std::vector<std::vector<int>> adj(nodes);
  std::vector<int> indeg(nodes, 0);
  for (auto [hi, lo] : gt) {
    int a = uf.find(hi + side), b = uf.find(lo + side);
    if (a == b) return std::nullopt;
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> ready, order;
  std::size_t roots = 0;
  for (int v = 0; v < nodes; ++v) {
    if (uf.find(v) != v) continue;
    ++roots;
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v - side);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != roots) return std::nullopt;
  return order;
}

inline std::optional<std::vector<int>> ql_order(int side, const std::set<std::pair<int, int>>& gt,
                                                std::span<const std::pair<int, int>> equal = {}) {
  std::vector<std::pair<int, int>> v(gt.begin(), gt.end());
  return ql_order(side, std::span<const std::pair<int, int>>(v), equal);
}

/// Checks whether `instrs` can be issued together from occupancy `g`.
///
/// Checks run in a fixed order, so the reported kind does not depend on the
/// order of `instrs`: MIXED_TYPES, BLOCKED_PATH, BARRIER_CLASH,
/// UNWANTED_INTERACTION, QL_CONTRADICTION. Only qubits that do not move in
/// this set contribute stay-put relations.
inline ConflictReport check_parallel_set(const Grid& g, std::span<const Instruction> instrs) {
  using namespace crossbar_detail;
  const int n = static_cast<int>(instrs.size());
  std::vector<int> ac, dc;
  for (int i = 0; i < n; ++i) (is_ac(instrs[i].kind) ? ac : dc).push_back(i);

  if (!ac.empty() && !dc.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return ConflictReport::conflict(ConflictKind::MIXED_TYPES, all,
                                    "AC rotations and DC shuttles in one cycle");
  }
  if (!ac.empty()) {
    for (int i : ac)
      for (int j : ac)
        if (i < j && instrs[i].parity == instrs[j].parity) {
          return ConflictReport::conflict(ConflictKind::BARRIER_CLASH, {i, j},
                                          "two pulses on " + std::string(parity_name(instrs[i].parity)) +
                                              " columns");
        }
    return {};
  }

  // Blocked paths: each instruction alone, then shared qubits/destinations.
  std::vector<SignalRequirements> req(n);
  std::vector<std::pair<QubitId, int>> user;
  std::vector<std::pair<Site, int>> dest;
  auto find = [](auto& v, auto key) {
    return std::find_if(v.begin(), v.end(), [&](const auto& e) { return e.first == key; });
  };
  for (int i = 0; i < n; ++i) {
    const Instruction& in = instrs[i];
    std::vector<QubitId> qs{in.q0};
    if (in.kind == InstrKind::SQSWAP) qs.push_back(in.q1);
    for (QubitId q : qs) {
      if (!g.has_qubit(q)) {
        return ConflictReport::conflict(ConflictKind::BLOCKED_PATH, {i},
                                        "unknown qubit " + std::to_string(q));
      }
      auto it = find(user, q);
      if (it != user.end()) {
        return ConflictReport::conflict(ConflictKind::BLOCKED_PATH, {it->second, i},
                                        "qubit " + std::to_string(q) + " used twice");
      }
      user.push_back({q, i});
    }
    try {
      req[i] = requirements(g, in);
    } catch (const ConflictError& e) {
      return ConflictReport::conflict(e.kind(), {i}, e.what());
    }
    if (is_shuttle(in.kind)) {
      Site to = step(g.site_of(in.q0), shuttle_direction(in));
      auto it = find(dest, to);
      if (it != dest.end()) {
        return ConflictReport::conflict(ConflictKind::BLOCKED_PATH, {it->second, i},
                                        "two qubits shuttle to " + site_str(to));
      }
      dest.push_back({to, i});
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const LineId& l : req[i].lowered)
        if (req[j].raised.count(l)) {
          return ConflictReport::conflict(ConflictKind::BARRIER_CLASH, {i, j},
                                          to_string(l) + " must be both lowered and raised");
        }
    }

  // Two sqswap pairs sharing a row line are both intended.
  auto sqswap_pair = [&](QubitId a, QubitId b) {
    return std::any_of(instrs.begin(), instrs.end(), [&](const Instruction& in) {
      return in.kind == InstrKind::SQSWAP && ((in.q0 == a && in.q1 == b) || (in.q0 == b && in.q1 == a));
    });
  };
  for (int i = 0; i < n; ++i) {
    const Instruction& in = instrs[i];
    Site own = g.site_of(in.q0);
    for (const LineId& l : req[i].lowered) {
      for (int t = 0; t < g.side(); ++t) {
        bool other = l.family == LineFamily::RL ? t != own.x : t != own.y;
        if (!other) continue;
        Site a = l.family == LineFamily::RL ? Site{t, l.index} : Site{l.index, t};
        Site b = l.family == LineFamily::RL ? Site{t, l.index + 1} : Site{l.index + 1, t};
        if (g.occupied(a) && g.occupied(b) && !sqswap_pair(g.at(a), g.at(b))) {
          return ConflictReport::conflict(
              ConflictKind::UNWANTED_INTERACTION, {i},
              "lowering " + to_string(l) + " couples qubits " + std::to_string(g.at(a)) + " and " +
                  std::to_string(g.at(b)));
        }
      }
    }
  }

  // QL relations. Stay-puts of qubits that act in this set are dropped.
  std::vector<std::pair<int, int>> equal, gt;
  std::vector<int> owner;
  for (int i = 0; i < n; ++i) {
    for (const auto& r : req[i].relations) {
      if (!r.mover && find(user, r.subject) != user.end()) continue;
      gt.push_back({r.hi, r.lo});
      owner.push_back(i);
    }
    for (auto e : req[i].ql_equal) equal.push_back(e);
  }
  if (ql_order(g.side(), gt, equal)) return {};

  const int side = g.side();
  const int nodes = 2 * side + 1;
  UnionFind uf(nodes);
  for (auto [a, b] : equal) uf.join(a + side, b + side);
  std::vector<std::vector<int>> adj(nodes);
  for (auto [hi, lo] : gt) adj[uf.find(hi + side)].push_back(uf.find(lo + side));
  auto comp = scc(adj);
  std::vector<int> size(nodes, 0);
  for (int v = 0; v < nodes; ++v)
    if (uf.find(v) == v) ++size[comp[v]];
  std::set<std::pair<int, int>> cycle;
  std::vector<int> who;
  for (std::size_t e = 0; e < gt.size(); ++e) {
    int a = uf.find(gt[e].first + side), b = uf.find(gt[e].second + side);
    if (a == b || (comp[a] == comp[b] && size[comp[a]] > 1)) {
      cycle.insert(gt[e]);
      who.push_back(owner[e]);
    }
  }
  ConflictReport rep = ConflictReport::conflict(
      ConflictKind::QL_CONTRADICTION, who,
      "QL relations contain a cycle over " + std::to_string(cycle.size()) + " relations");
  rep.ql_cycle.assign(cycle.begin(), cycle.end());
  return rep;
}

inline ConflictReport check_parallel_set(const Grid& g, const std::vector<Instruction>& instrs) {
  return check_parallel_set(g, std::span<const Instruction>(instrs));
}

/// Position update of a single instruction. Shuttles move their qubit by one
/// site; everything else leaves positions unchanged.
inline Grid apply_op(Grid g, const Instruction& in) {
  if (!is_shuttle(in.kind)) {
    if (in.kind == InstrKind::SQSWAP) (void)sqswap_requirements(g, in.q0, in.q1);
    return g;
  }
  Site to = step(g.site_of(in.q0), shuttle_direction(in));
  if (!g.in_grid(to) || g.occupied(to)) {
    throw ConflictError(ConflictKind::BLOCKED_PATH, "illegal shuttle of qubit " + std::to_string(in.q0));
  }
  g.move(in.q0, to);
  return g;
}

/// Applies a whole cycle, all moves simultaneously from the pre-cycle grid.
inline Grid apply_cycle(Grid g, std::span<const Instruction> instrs) {
  std::vector<std::pair<QubitId, Site>> moves;
  for (const Instruction& in : instrs) {
    if (is_shuttle(in.kind)) moves.push_back({in.q0, step(g.site_of(in.q0), shuttle_direction(in))});
  }
  const Grid pre = g;
  for (auto [q, to] : moves) {
    if (!pre.in_grid(to) || pre.occupied(to) || g.occupied(to)) {
      throw ConflictError(ConflictKind::BLOCKED_PATH, "illegal shuttle of qubit " + std::to_string(q));
    }
    g.move(q, to);
  }
  return g;
}

inline Grid apply_cycle(Grid g, const Cycle& c) {
  return apply_cycle(std::move(g), std::span<const Instruction>(c.instructions));
}

}  // namespace xbar
