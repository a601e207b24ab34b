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

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "xbar/config.hpp"
#include "xbar/qasm.hpp"

namespace {

using namespace xbar;
using std::numbers::pi;

TEST(Qasm, ParsesHeaderRegistersAndGates) {
  const char* text = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c[3];
h q[0];
cx q[0],q[2];
rz(pi/4) q[1];
barrier q;
measure q[1] -> c[1];
)";
  std::vector<std::string> warnings;
  Circuit c = parse_qasm(text, &warnings);
  EXPECT_EQ(c.n_qubits, 3);
  ASSERT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(c.gates[0], Gate::one(GateKind::H, 0));
  EXPECT_EQ(c.gates[1], Gate::cnot(0, 2));
  EXPECT_EQ(c.gates[2].kind, GateKind::RZ);
  EXPECT_DOUBLE_EQ(c.gates[2].angle, pi / 4);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("measurement"), std::string::npos);
}

TEST(Qasm, AngleExpressions) {
  EXPECT_DOUBLE_EQ(eval_angle("pi"), pi);
  EXPECT_DOUBLE_EQ(eval_angle("-pi/2"), -pi / 2);
  EXPECT_DOUBLE_EQ(eval_angle("3*pi/4"), 3 * pi / 4);
  EXPECT_DOUBLE_EQ(eval_angle("(1+2)*0.5"), 1.5);
  EXPECT_DOUBLE_EQ(eval_angle("1e-3"), 1e-3);
  EXPECT_DOUBLE_EQ(eval_angle("2 - -1"), 3.0);
  EXPECT_THROW(eval_angle("pi +"), ParseError);
  EXPECT_THROW(eval_angle("tau"), ParseError);
  EXPECT_THROW(eval_angle("(1"), ParseError);
}

TEST(Qasm, ErrorsCarryTheLine) {
  const std::string bad = "OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n";
  try {
    parse_qasm(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Qasm, RejectsMalformedInput) {
  const std::string head = "OPENQASM 2.0;\nqreg q[2];\n";
  EXPECT_THROW(parse_qasm(head + "h q[2];"), ParseError);           // out of range
  EXPECT_THROW(parse_qasm(head + "cx q[0],q[0];"), ParseError);     // identical operands
  EXPECT_THROW(parse_qasm(head + "rx q[0];"), ParseError);          // missing angle
  EXPECT_THROW(parse_qasm(head + "h(0.1) q[0];"), ParseError);      // parameter on h
  EXPECT_THROW(parse_qasm(head + "cx q[0];"), ParseError);          // arity
  EXPECT_THROW(parse_qasm("OPENQASM 3.0;\nqreg q[1];"), ParseError);
  EXPECT_THROW(parse_qasm("h q[0];"), ParseError);                  // gate before qreg
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;"), ParseError);            // no qreg
  EXPECT_THROW(parse_qasm(head + "qreg r[2];"), ParseError);        // second qreg
  EXPECT_THROW(parse_qasm(head + "h r[0];"), ParseError);           // unknown register
}

TEST(Qasm, CommentsAndLineNumbers) {
  const char* text = "// header\nOPENQASM 2.0; // trailing\nqreg q[1];\n\n// gap\nx q[0];\n";
  Circuit c = parse_qasm(text);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0].kind, GateKind::X);
}

TEST(Qasm, WriteThenParseIsIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    Circuit c;
    c.n_qubits = 5;
    for (int i = 0; i < 30; ++i) {
      int a = static_cast<int>(rng() % 5), b = static_cast<int>((a + 1 + rng() % 4) % 5);
      switch (rng() % 6) {
        case 0: c.gates.push_back(Gate::rx(a, ang(rng))); break;
        case 1: c.gates.push_back(Gate::ry(a, ang(rng))); break;
        case 2: c.gates.push_back(Gate::rz(a, ang(rng))); break;
        case 3: c.gates.push_back(Gate::sqswap(a, b)); break;
        case 4: c.gates.push_back(Gate::cnot(a, b)); break;
        default: c.gates.push_back(Gate::one(GateKind::TDG, a)); break;
      }
    }
    Circuit back = parse_qasm(write_qasm(c));
    EXPECT_EQ(back, c);
  }
}

TEST(Config, DefaultsWhenEmpty) {
  ArchConfig c = load_config("{}");
  EXPECT_EQ(c, default_config());
  EXPECT_DOUBLE_EQ(c.single_qubit.mean, 0.9999);
  EXPECT_DOUBLE_EQ(c.shuttle.mean, 0.9999);
  EXPECT_DOUBLE_EQ(c.sqswap.mean, 0.9998);
  EXPECT_EQ(c.seed, 1u);
}

TEST(Config, OverridesAndStringAngles) {
  ArchConfig c = load_config(R"({
    "seed": 42,
    "fidelities": {"shuttle": {"mean": 0.99, "std": 0}},
    "decompositions": {"h": [{"kind": "ry", "angle": "pi/2", "operand_roles": [0]},
                              {"kind": "rx", "angle": "pi", "operand_roles": [0]}]}
  })");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_DOUBLE_EQ(c.shuttle.mean, 0.99);
  EXPECT_DOUBLE_EQ(c.shuttle.std, 0.0);
  EXPECT_DOUBLE_EQ(c.single_qubit.mean, 0.9999);
  const auto& h = c.decompositions.at(GateKind::H);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].kind, GateKind::RY);
  EXPECT_DOUBLE_EQ(h[0].angle, pi / 2);
  // untouched rules keep their defaults
  EXPECT_EQ(c.decompositions.at(GateKind::CNOT), default_decompositions().at(GateKind::CNOT));
}

TEST(Config, RejectsInvalidDocuments) {
  EXPECT_THROW(load_config("not json"), ConfigError);
  EXPECT_THROW(load_config(R"({"colour": 1})"), ConfigError);
  EXPECT_THROW(load_config(R"({"seed": "x"})"), ConfigError);
  EXPECT_THROW(load_config(R"({"fidelities": {"shuttle": {"mean": 1.5}}})"), ConfigError);
  EXPECT_THROW(load_config(R"({"fidelities": {"shuttle": {"std": -1}}})"), ConfigError);
  EXPECT_THROW(load_config(R"({"decompositions": {"h": [{"kind": "h", "operand_roles": [0]}]}})"),
               ConfigError);  // non-native template
  EXPECT_THROW(load_config(R"({"decompositions": {"cx": [{"kind": "sqswap", "operand_roles": [0, 0]}]}})"),
               ConfigError);
  EXPECT_THROW(load_config(R"({"decompositions": {"x": [{"kind": "rx", "operand_roles": [1]}]}})"),
               ConfigError);  // role out of range
  EXPECT_THROW(load_config(R"({"decompositions": {"rx": [{"kind": "rx", "operand_roles": [0]}]}})"),
               ConfigError);  // native kinds are not rewritten
  EXPECT_THROW(load_config(R"({"decompositions": {"h": []}})"), ConfigError);
}

}  // namespace
