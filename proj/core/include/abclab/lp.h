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

#ifndef ABCLAB_LP_H_
#define ABCLAB_LP_H_

#include <optional>
#include <string_view>
#include <vector>

#include "abclab/rational.h"

namespace abclab {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearTerm {
  int variable;
  Rational coefficient;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;  // one entry per variable, sorted
  Relation relation;
  Rational rhs;
};

// Bounds default to [0, +inf). A missing side is unbounded.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;
};

// A maximization problem over exact rationals.
class LinearProgram {
 public:
  explicit LinearProgram(int num_variables);

  int num_variables() const { return num_variables_; }

  void SetObjectiveCoefficient(int variable, Rational coefficient);
  void SetBounds(int variable, VariableBounds bounds);

  // Duplicate variables are summed. Returns the row index.
  int AddConstraint(std::vector<LinearTerm> terms, Relation relation,
                    Rational rhs);
  // Dense form; throws std::invalid_argument on a length mismatch.
  int AddDenseConstraint(const std::vector<Rational>& coefficients,
                         Relation relation, Rational rhs);

  const std::vector<Rational>& objective() const { return objective_; }
  const VariableBounds& bounds(int variable) const {
    return bounds_[variable];
  }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  // Exact check of every constraint and bound.
  bool IsFeasible(const std::vector<Rational>& point) const;
  Rational ObjectiveValue(const std::vector<Rational>& point) const;

 private:
  void CheckVariable(int variable) const;

  int num_variables_;
  std::vector<Rational> objective_;
  std::vector<VariableBounds> bounds_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                   // meaningful when optimal
  std::vector<Rational> assignment;  // meaningful when optimal
};

// Two-phase primal simplex on a dense tableau. Pivots use the largest reduced
// cost and fall back to Bland's rule while pivots are degenerate, so the
// method cannot cycle. The returned assignment is re-checked exactly.
LpOutcome LpMaximize(const LinearProgram& program);

// Same as LpMaximize with the objective ignored.
LpOutcome LpFeasible(const LinearProgram& program);

}  // namespace abclab

#endif  // ABCLAB_LP_H_
