// Copyright 2026 The crkit Authors
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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace crkit {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Malformed input text (graph or circuit files). Carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A structural precondition was violated (self-loop, size mismatch, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or search exceeded its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Process-wide soft wall-clock limit. Long-running loops call
// Deadline::check(), which throws BudgetExceeded once the limit passes.
class Deadline {
 public:
  static void set_after(std::chrono::milliseconds budget);
  static void clear();
  static void check();
  static bool active();

 private:
  static std::optional<std::chrono::steady_clock::time_point> until_;
};

}  // namespace crkit
