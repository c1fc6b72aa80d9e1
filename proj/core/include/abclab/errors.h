// Copyright 2026 The abclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABCLAB_ERRORS_H_
#define ABCLAB_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace abclab {

// Malformed instance text. `line()` is 1-based; 0 when the error is not tied
// to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + message
                               : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Raised by exhaustive searches when the configured node budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("search budget exceeded: " + what) {}
};

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

// Counts enumeration nodes and throws once the limit is passed.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = kDefaultSearchBudget,
                        std::string label = "exhaustive search")
      : limit_(limit), label_(std::move(label)) {}

  void Charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw BudgetExceeded(label_ + " needs more than " +
                           std::to_string(limit_) + " nodes");
    }
  }

  // Throws up front when a known enumeration size cannot fit.
  void Require(std::uint64_t nodes) {
    if (nodes > limit_ || used_ + nodes > limit_) {
      throw BudgetExceeded(label_ + " needs " + std::to_string(nodes) +
                           " nodes, limit " + std::to_string(limit_));
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string label_;
};

}  // namespace abclab

#endif  // ABCLAB_ERRORS_H_
