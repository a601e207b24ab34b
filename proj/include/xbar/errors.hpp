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

#include <stdexcept>
#include <string>

namespace xbar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed QASM input. Carries the 1-based line of the offending statement.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Invalid architecture configuration or schedule document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A circuit that violates a precondition (missing rule, empty, bad operand).
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// Raised by defensive re-checks. Reaching one of these is a compiler bug,
/// not a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace xbar
