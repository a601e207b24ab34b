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
 * @file qasm.hpp
 * @brief OPENQASM 2.0 subset reader and writer.
 *
 * Accepted statements:
 *   OPENQASM 2.0;   include "...";   qreg q[n];   creg c[n];   barrier ...;
 *   h|x|y|z|s|sdg|t|tdg q[i];   rx|ry|rz(expr) q[i];   cx|cz|sqswap q[i],q[j];
 *   measure q[i] -> c[j];   measure q -> c;
 *
 * `include`, `creg` and `barrier` are accepted and ignored. Measurements are
 * dropped with a warning. Angle expressions support numbers, `pi`, unary
 * minus, + - * / and parentheses.
 */
#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "xbar/circuit.hpp"
#include "xbar/errors.hpp"

namespace xbar {

namespace qasm_detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, int line) : s_(text), line_(line) {}

  double parse() {
    double v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' in expression");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        double d = unary();
        if (d == 0.0) fail("division by zero in expression");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  double primary() {
    skip_ws();
    if (eat('(')) {
      double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 2) == "pi" &&
        (pos_ + 2 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 2])))) {
      pos_ += 2;
      return std::numbers::pi;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected number or 'pi' in expression");
    std::string tok(s_.substr(start, pos_ - start));
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail("malformed number '" + tok + "'");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct Statement {
  std::string text;
  int line;
};

// Strips comments and splits on ';'. Each statement remembers the line of its
// first non-blank character.
inline std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  std::string cur;
  int line = 1;
  int start_line = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) ++line;
      if (!cur.empty()) cur.push_back(' ');
      continue;
    }
    if (c == '\n') {
      ++line;
      if (!cur.empty()) cur.push_back(' ');
      continue;
    }
    if (c == ';') {
      out.push_back({std::string(trim(cur)), start_line == 0 ? line : start_line});
      cur.clear();
      start_line = 0;
      continue;
    }
    if (start_line == 0 && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    cur.push_back(c);
  }
  if (!trim(cur).empty()) throw ParseError(start_line, "missing ';' after statement");
  return out;
}

// Parses "name[idx]" and returns idx; `reg` must match `name`.
inline int parse_indexed(std::string_view tok, std::string_view reg, int size, int line) {
  tok = trim(tok);
  auto lb = tok.find('[');
  if (lb == std::string_view::npos || tok.back() != ']') {
    throw ParseError(line, "expected operand of the form " + std::string(reg) + "[i], got '" +
                               std::string(tok) + "'");
  }
  std::string_view name = trim(tok.substr(0, lb));
  std::string_view idx = trim(tok.substr(lb + 1, tok.size() - lb - 2));
  if (name != reg) throw ParseError(line, "unknown register '" + std::string(name) + "'");
  if (idx.empty()) throw ParseError(line, "empty register index");
  int v = 0;
  for (char c : idx) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, "register index must be a non-negative integer");
    }
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError(line, "register index too large");
  }
  if (v >= size) {
    throw ParseError(line, "operand " + std::string(tok) + " out of register bounds (size " +
                               std::to_string(size) + ")");
  }
  return v;
}

inline std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace qasm_detail

/// Evaluates an angle expression such as "-pi/2" or "0.25*pi".
inline double eval_angle(std::string_view text, int line = 0) {
  return qasm_detail::ExprParser(text, line).parse();
}

/// Parses the supported OPENQASM 2.0 subset. Warnings (dropped measurements)
/// are appended to `warnings` when it is non-null.
inline Circuit parse_qasm(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  using namespace qasm_detail;
  Circuit circuit;
  std::string qreg;
  bool have_qreg = false;

  for (const Statement& st : split_statements(text)) {
    std::string_view s = st.text;
    const int line = st.line;
    if (s.empty()) continue;

    std::size_t head_end = 0;
    while (head_end < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[head_end])) || s[head_end] == '_')) {
      ++head_end;
    }
    std::string_view head = s.substr(0, head_end);
    std::string_view rest = trim(s.substr(head_end));

    if (head == "OPENQASM") {
      if (rest != "2.0" && rest != "2") {
        throw ParseError(line, "unsupported OPENQASM version '" + std::string(rest) + "'");
      }
      continue;
    }
    if (head == "include") {
      if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
        throw ParseError(line, "malformed include");
      }
      continue;
    }
    if (head == "qreg" || head == "creg") {
      auto lb = rest.find('[');
      if (lb == std::string_view::npos || rest.back() != ']') {
        throw ParseError(line, "malformed register declaration");
      }
      std::string_view name = trim(rest.substr(0, lb));
      std::string_view size_txt = trim(rest.substr(lb + 1, rest.size() - lb - 2));
      if (!is_ident(name)) throw ParseError(line, "invalid register name");
      int size = 0;
      if (size_txt.empty()) throw ParseError(line, "missing register size");
      for (char c : size_txt) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError(line, "register size must be a positive integer");
        }
        size = size * 10 + (c - '0');
        if (size > 1'000'000) throw ParseError(line, "register too large");
      }
      if (size < 1) throw ParseError(line, "register size must be positive");
      if (head == "qreg") {
        if (have_qreg) throw ParseError(line, "multiple qreg declarations are not supported");
        have_qreg = true;
        qreg = std::string(name);
        circuit.n_qubits = size;
      }
      continue;
    }
    if (head == "barrier") continue;

    if (!have_qreg) throw ParseError(line, "gate statement before qreg declaration");

    if (head == "measure") {
      auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) throw ParseError(line, "measure requires '->'");
      std::string_view src = trim(rest.substr(0, arrow));
      if (src != qreg) parse_indexed(src, qreg, circuit.n_qubits, line);
      if (warnings) warnings->push_back("line " + std::to_string(line) + ": measurement dropped");
      continue;
    }

    auto kind = gate_from_name(head);
    if (!kind || *kind == GateKind::MEASURE) {
      throw ParseError(line, "unknown gate '" + std::string(head) + "'");
    }

    Gate g;
    g.kind = *kind;
    if (!rest.empty() && rest.front() == '(') {
      int depth = 0;
      std::size_t close = std::string_view::npos;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == std::string_view::npos) throw ParseError(line, "unbalanced parentheses");
      if (!is_rotation(*kind)) {
        throw ParseError(line, "gate '" + std::string(head) + "' takes no parameter");
      }
      g.angle = eval_angle(rest.substr(1, close - 1), line);
      rest = trim(rest.substr(close + 1));
    } else if (is_rotation(*kind)) {
      throw ParseError(line, "gate '" + std::string(head) + "' requires an angle");
    }

    auto ops = split_commas(rest);
    if (static_cast<int>(ops.size()) != g.arity() || rest.empty()) {
      throw ParseError(line, "gate '" + std::string(head) + "' expects " +
                                 std::to_string(g.arity()) + " operand(s)");
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
      g.qubits[i] = parse_indexed(ops[i], qreg, circuit.n_qubits, line);
    }
    if (g.arity() == 2 && g.qubits[0] == g.qubits[1]) {
      throw ParseError(line, "two-qubit gate with identical operands");
    }
    circuit.gates.push_back(g);
  }

  if (!have_qreg) throw ParseError(1, "no qreg declaration");
  return circuit;
}

/// Formats an angle so that parsing it back yields the same double.
inline std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

/// Writes a circuit as OPENQASM 2.0 text readable by parse_qasm.
inline std::string write_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    out += gate_name(g.kind);
    if (is_rotation(g.kind)) out += "(" + format_angle(g.angle) + ")";
    out += " q[" + std::to_string(g.qubits[0]) + "]";
    if (g.arity() == 2) out += ",q[" + std::to_string(g.qubits[1]) + "]";
    out += ";\n";
  }
  return out;
}

}  // namespace xbar
