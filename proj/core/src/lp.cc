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

#include "abclab/lp.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace abclab {

LinearProgram::LinearProgram(int num_variables)
    : num_variables_(num_variables),
      objective_(num_variables),
      bounds_(num_variables) {
  if (num_variables < 0) {
    throw std::invalid_argument("negative variable count");
  }
}

void LinearProgram::CheckVariable(int variable) const {
  if (variable < 0 || variable >= num_variables_) {
    throw std::invalid_argument("variable " + std::to_string(variable) +
                                " outside 0.." +
                                std::to_string(num_variables_ - 1));
  }
}

void LinearProgram::SetObjectiveCoefficient(int variable,
                                            Rational coefficient) {
  CheckVariable(variable);
  objective_[variable] = std::move(coefficient);
}

void LinearProgram::SetBounds(int variable, VariableBounds bounds) {
  CheckVariable(variable);
  bounds_[variable] = std::move(bounds);
}

int LinearProgram::AddConstraint(std::vector<LinearTerm> terms,
                                 Relation relation, Rational rhs) {
  std::map<int, Rational> merged;
  for (auto& term : terms) {
    CheckVariable(term.variable);
    merged[term.variable] += term.coefficient;
  }
  LinearConstraint row{{}, relation, std::move(rhs)};
  for (auto& [variable, coefficient] : merged) {
    if (!coefficient.is_zero()) {
      row.terms.push_back({variable, std::move(coefficient)});
    }
  }
  constraints_.push_back(std::move(row));
  return static_cast<int>(constraints_.size()) - 1;
}

int LinearProgram::AddDenseConstraint(const std::vector<Rational>& coefficients,
                                      Relation relation, Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_variables_) {
    throw std::invalid_argument(
        "constraint has " + std::to_string(coefficients.size()) +
        " coefficients, program has " + std::to_string(num_variables_) +
        " variables");
  }
  std::vector<LinearTerm> terms;
  for (int j = 0; j < num_variables_; ++j) {
    if (!coefficients[j].is_zero()) terms.push_back({j, coefficients[j]});
  }
  return AddConstraint(std::move(terms), relation, std::move(rhs));
}

bool LinearProgram::IsFeasible(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_variables_) return false;
  for (int j = 0; j < num_variables_; ++j) {
    if (bounds_[j].lower && point[j] < *bounds_[j].lower) return false;
    if (bounds_[j].upper && point[j] > *bounds_[j].upper) return false;
  }
  for (const auto& row : constraints_) {
    Rational lhs;
    for (const auto& term : row.terms) {
      lhs += term.coefficient * point[term.variable];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

Rational LinearProgram::ObjectiveValue(const std::vector<Rational>& point) const {
  Rational value;
  for (int j = 0; j < num_variables_; ++j) value += objective_[j] * point[j];
  return value;
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// x = offset + sign * column  (minus `negative_column` for free variables).
struct VariableMap {
  mpq_class offset;
  int sign = 1;
  int column = -1;
  int negative_column = -1;
};

class Tableau {
 public:
  // rows x (columns + 1); the last entry of each row is the right-hand side.
  std::vector<std::vector<mpq_class>> rows;
  std::vector<int> basis;        // basic column of each row
  std::vector<mpq_class> costs;  // reduced costs, last entry is -objective
  int num_columns = 0;
  int first_artificial = 0;

  const mpq_class& rhs(int r) const { return rows[r][num_columns]; }

  void Pivot(int pivot_row, int entering) {
    auto& prow = rows[pivot_row];
    const mpq_class pivot = prow[entering];
    std::vector<int> nonzero;
    for (int j = 0; j <= num_columns; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= pivot;
        nonzero.push_back(j);
      }
    }
    mpq_class factor;
    mpq_class product;
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[entering]) == 0) return;
      factor = row[entering];
      for (int j : nonzero) {
        product = factor * prow[j];
        row[j] -= product;
      }
    };
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != pivot_row) eliminate(rows[r]);
    }
    eliminate(costs);
    basis[pivot_row] = entering;
  }

  // Recomputes reduced costs for `objective` (indexed by column).
  void Price(const std::vector<mpq_class>& objective) {
    costs.assign(num_columns + 1, mpq_class(0));
    for (int j = 0; j < num_columns; ++j) costs[j] = objective[j];
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      const mpq_class& cb = objective[basis[r]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= num_columns; ++j) {
        if (sgn(rows[r][j]) != 0) costs[j] -= cb * rows[r][j];
      }
    }
  }

  // Returns false when the objective is unbounded.
  bool Optimize(int column_limit) {
    bool degenerate = false;
    while (true) {
      int entering = -1;
      for (int j = 0; j < column_limit; ++j) {
        if (sgn(costs[j]) <= 0) continue;
        if (degenerate) {
          entering = j;
          break;
        }
        if (entering < 0 || costs[j] > costs[entering]) entering = j;
      }
      if (entering < 0) return true;

      int leaving = -1;
      mpq_class best_ratio;
      mpq_class ratio;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        const mpq_class& a = rows[r][entering];
        if (sgn(a) <= 0) continue;
        ratio = rhs(r) / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      degenerate = sgn(best_ratio) == 0;
      Pivot(leaving, entering);
    }
  }
};

LpOutcome Solve(const LinearProgram& program, bool use_objective) {
  const int n = program.num_variables();

  // Map every variable onto nonnegative columns.
  std::vector<VariableMap> maps(n);
  int columns = 0;
  std::vector<std::pair<int, mpq_class>> upper_rows;  // column, width
  for (int j = 0; j < n; ++j) {
    const auto& b = program.bounds(j);
    if (b.lower && b.upper && *b.upper < *b.lower) {
      return LpOutcome{LpStatus::kInfeasible, {}, {}};
    }
    auto& map = maps[j];
    if (b.lower) {
      map.offset = b.lower->value();
      map.column = columns++;
      if (b.upper) {
        upper_rows.emplace_back(map.column,
                                mpq_class(b.upper->value() - b.lower->value()));
      }
    } else if (b.upper) {
      map.offset = b.upper->value();
      map.sign = -1;
      map.column = columns++;
    } else {
      map.column = columns++;
      map.negative_column = columns++;
    }
  }
  const int structural = columns;

  struct Row {
    std::vector<std::pair<int, mpq_class>> entries;
    Relation relation;
    mpq_class rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : program.constraints()) {
    Row row{{}, c.relation, c.rhs.value()};
    for (const auto& term : c.terms) {
      const auto& map = maps[term.variable];
      const mpq_class& a = term.coefficient.value();
      row.rhs -= a * map.offset;
      row.entries.emplace_back(map.column, map.sign > 0 ? a : mpq_class(-a));
      if (map.negative_column >= 0) {
        row.entries.emplace_back(map.negative_column, mpq_class(-a));
      }
    }
    rows.push_back(std::move(row));
  }
  for (auto& [column, width] : upper_rows) {
    rows.push_back(Row{{{column, mpq_class(1)}}, Relation::kLessEqual, width});
  }
  for (auto& row : rows) {
    if (sgn(row.rhs) < 0) {
      row.rhs = -row.rhs;
      for (auto& e : row.entries) e.second = -e.second;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
  }

  // Column layout: structural | slack & surplus | artificial.
  int slack_columns = 0;
  int artificial_columns = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::kEqual) ++slack_columns;
    if (row.relation != Relation::kLessEqual) ++artificial_columns;
  }
  Tableau t;
  t.num_columns = structural + slack_columns + artificial_columns;
  t.first_artificial = structural + slack_columns;
  t.rows.assign(rows.size(), std::vector<mpq_class>(t.num_columns + 1));
  t.basis.assign(rows.size(), -1);
  int next_slack = structural;
  int next_artificial = t.first_artificial;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    auto& trow = t.rows[r];
    for (const auto& [column, value] : rows[r].entries) trow[column] += value;
    trow[t.num_columns] = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::kLessEqual:
        trow[next_slack] = 1;
        t.basis[r] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        trow[next_slack++] = -1;
        trow[next_artificial] = 1;
        t.basis[r] = next_artificial++;
        break;
      case Relation::kEqual:
        trow[next_artificial] = 1;
        t.basis[r] = next_artificial++;
        break;
    }
  }

  // Phase 1: maximize -(sum of artificials).
  if (artificial_columns > 0) {
    std::vector<mpq_class> phase1(t.num_columns, mpq_class(0));
    for (int j = t.first_artificial; j < t.num_columns; ++j) phase1[j] = -1;
    t.Price(phase1);
    t.Optimize(t.num_columns);
    if (sgn(t.costs[t.num_columns]) != 0) {
      return LpOutcome{LpStatus::kInfeasible, {}, {}};
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = 0; r < static_cast<int>(t.rows.size());) {
      if (t.basis[r] < t.first_artificial) {
        ++r;
        continue;
      }
      int entering = -1;
      for (int j = 0; j < t.first_artificial; ++j) {
        if (sgn(t.rows[r][j]) != 0) {
          entering = j;
          break;
        }
      }
      if (entering >= 0) {
        t.Pivot(r, entering);
        ++r;
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
  }

  // Phase 2 over non-artificial columns.
  std::vector<mpq_class> phase2(t.num_columns, mpq_class(0));
  if (use_objective) {
    for (int j = 0; j < n; ++j) {
      const auto& map = maps[j];
      const mpq_class& c = program.objective()[j].value();
      phase2[map.column] += map.sign > 0 ? c : mpq_class(-c);
      if (map.negative_column >= 0) phase2[map.negative_column] -= c;
    }
  }
  t.Price(phase2);
  if (!t.Optimize(t.first_artificial)) {
    return LpOutcome{LpStatus::kUnbounded, {}, {}};
  }

  std::vector<mpq_class> column_values(t.num_columns, mpq_class(0));
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
    column_values[t.basis[r]] = t.rhs(r);
  }
  LpOutcome outcome;
  outcome.status = LpStatus::kOptimal;
  outcome.assignment.reserve(n);
  for (int j = 0; j < n; ++j) {
    const auto& map = maps[j];
    mpq_class x = map.offset;
    if (map.sign > 0) {
      x += column_values[map.column];
    } else {
      x -= column_values[map.column];
    }
    if (map.negative_column >= 0) x -= column_values[map.negative_column];
    outcome.assignment.emplace_back(std::move(x));
  }
  if (!program.IsFeasible(outcome.assignment)) {
    throw std::logic_error("simplex produced an infeasible assignment");
  }
  outcome.value = use_objective ? program.ObjectiveValue(outcome.assignment)
                                : Rational(0);
  return outcome;
}

}  // namespace

LpOutcome LpMaximize(const LinearProgram& program) {
  return Solve(program, /*use_objective=*/true);
}

LpOutcome LpFeasible(const LinearProgram& program) {
  return Solve(program, /*use_objective=*/false);
}

}  // namespace abclab
