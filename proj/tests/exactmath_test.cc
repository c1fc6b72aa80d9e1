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

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "abclab/axioms.h"
#include "abclab/generators.h"
#include "abclab/lp.h"
#include "abclab/rational.h"

namespace abclab {
namespace {

TEST(RationalTest, CanonicalRendering) {
  EXPECT_EQ(Rational(15, 48).ToString(), "5/16");
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(8, 4).ToString(), "2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  EXPECT_EQ(Rational::Parse("81/256"), Rational(81, 256));
  EXPECT_EQ(Rational::Parse("-4/6").ToString(), "-2/3");
  EXPECT_EQ(Rational::Parse("12"), Rational(12));
}

TEST(RationalTest, RejectsMalformed) {
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1.5"), std::invalid_argument);
}

TEST(RationalTest, Harmonic) {
  EXPECT_EQ(Harmonic(0), Rational(0));
  EXPECT_EQ(Harmonic(4), Rational(25, 12));
}

// Field axioms and order on random small fractions.
TEST(RationalTest, ArithmeticProperties) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)),
        c(num(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::Parse(a.ToString()), a);
    EXPECT_EQ(a < b, (a - b).sign() < 0);
  }
}

TEST(LpTest, BoundedMaximum) {
  LinearProgram lp(1);
  lp.SetObjectiveCoefficient(0, Rational(1));
  lp.AddConstraint({{0, Rational(1)}}, Relation::kLessEqual, Rational(3));
  const LpOutcome outcome = LpMaximize(lp);
  ASSERT_EQ(outcome.status, LpStatus::kOptimal);
  EXPECT_EQ(outcome.value, Rational(3));
}

TEST(LpTest, Infeasible) {
  LinearProgram lp(2);
  lp.SetObjectiveCoefficient(0, Rational(1));
  lp.SetObjectiveCoefficient(1, Rational(1));
  lp.AddConstraint({{0, Rational(1)}, {1, Rational(1)}}, Relation::kLessEqual,
                   Rational(1));
  lp.AddConstraint({{0, Rational(1)}, {1, Rational(1)}},
                   Relation::kGreaterEqual, Rational(2));
  EXPECT_EQ(LpMaximize(lp).status, LpStatus::kInfeasible);

  LinearProgram contradiction(1);
  contradiction.AddConstraint({{0, Rational(1)}}, Relation::kGreaterEqual,
                              Rational(1));
  contradiction.AddConstraint({{0, Rational(1)}}, Relation::kLessEqual,
                              Rational(0));
  EXPECT_EQ(LpFeasible(contradiction).status, LpStatus::kInfeasible);
}

TEST(LpTest, UnboundedAndBoxFeasible) {
  LinearProgram lp(1);
  lp.SetObjectiveCoefficient(0, Rational(1));
  EXPECT_EQ(LpMaximize(lp).status, LpStatus::kUnbounded);

  LinearProgram box(1);
  box.SetBounds(0, {Rational(0), Rational(1)});
  EXPECT_EQ(LpFeasible(box).status, LpStatus::kOptimal);
}

TEST(LpTest, DimensionMismatch) {
  LinearProgram lp(2);
  EXPECT_THROW(lp.AddDenseConstraint({Rational(1)}, Relation::kEqual, Rational(0)),
               std::invalid_argument);
}

// A degenerate program where naive largest-coefficient pivoting cycles
// (Beale's example); the optimum is 1/20.
TEST(LpTest, BealeDoesNotCycle) {
  LinearProgram lp(4);
  const Rational obj[] = {Rational(3, 4), Rational(-150), Rational(1, 50),
                          Rational(-6)};
  for (int i = 0; i < 4; ++i) lp.SetObjectiveCoefficient(i, obj[i]);
  lp.AddDenseConstraint({Rational(1, 4), Rational(-60), Rational(-1, 25),
                         Rational(9)},
                        Relation::kLessEqual, Rational(0));
  lp.AddDenseConstraint({Rational(1, 2), Rational(-90), Rational(-1, 50),
                         Rational(3)},
                        Relation::kLessEqual, Rational(0));
  lp.AddDenseConstraint({Rational(0), Rational(0), Rational(1), Rational(0)},
                        Relation::kLessEqual, Rational(1));
  const LpOutcome outcome = LpMaximize(lp);
  ASSERT_EQ(outcome.status, LpStatus::kOptimal);
  EXPECT_EQ(outcome.value, Rational(1, 20));
  EXPECT_TRUE(lp.IsFeasible(outcome.assignment));
}

// Random small programs: the optimum is feasible, matches its own objective,
// and does not change when the constraints are listed in reverse.
TEST(LpTest, RandomProgramsCertified) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(0, 9);
  for (int trial = 0; trial < 150; ++trial) {
    const int vars = 1 + trial % 4;
    const int rows = 1 + trial % 5;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(vars));
    std::vector<Rational> b(rows), c(vars);
    for (auto& row : a) {
      for (auto& x : row) x = Rational(coef(rng));
    }
    for (auto& x : b) x = Rational(rhs(rng));
    for (auto& x : c) x = Rational(coef(rng));
    LinearProgram forward(vars), backward(vars);
    for (int j = 0; j < vars; ++j) {
      forward.SetObjectiveCoefficient(j, c[j]);
      backward.SetObjectiveCoefficient(j, c[j]);
      forward.SetBounds(j, {Rational(0), Rational(10)});
      backward.SetBounds(j, {Rational(0), Rational(10)});
    }
    for (int i = 0; i < rows; ++i) {
      forward.AddDenseConstraint(a[i], Relation::kLessEqual, b[i]);
      backward.AddDenseConstraint(a[rows - 1 - i], Relation::kLessEqual,
                                  b[rows - 1 - i]);
    }
    const LpOutcome one = LpMaximize(forward);
    const LpOutcome two = LpMaximize(backward);
    // x = 0 is always feasible and the box bounds the objective.
    ASSERT_EQ(one.status, LpStatus::kOptimal) << "trial " << trial;
    ASSERT_EQ(two.status, LpStatus::kOptimal);
    EXPECT_TRUE(forward.IsFeasible(one.assignment));
    EXPECT_EQ(forward.ObjectiveValue(one.assignment), one.value);
    EXPECT_EQ(one.value, two.value) << "trial " << trial;
  }
}

// Hand-built payments for the intro committee (a): v1..v3 pay 1/6 for each
// of c1..c3 and 1/2 for their own c4/c5/c6; v4..v6 pay 1/2 for two members
// each. They support (a) at price 1/2, so the LP optimum is at least 1/2.
TEST(LpTest, IntroCommitteePriceAtLeastHalf) {
  const ElectionInstance intro = Fixture(FixtureId::kIntro);
  const Committee a = Committee::Parse("1,2,3,7,8,10,11,13,14,4,5,6");
  PriceSystem manual{Rational(1, 2), {}};
  manual.payments.resize(6);
  for (Voter v = 0; v < 3; ++v) {
    for (Candidate c = 0; c < 3; ++c) manual.payments[v][c] = Rational(1, 6);
    manual.payments[v][3 + v] = Rational(1, 2);
  }
  for (Voter v = 3; v < 6; ++v) {
    const Candidate first = 6 + 3 * (v - 3);
    manual.payments[v][first] = Rational(1, 2);
    manual.payments[v][first + 1] = Rational(1, 2);
  }
  EXPECT_TRUE(SupportsCommittee(intro, a, manual));

  const auto system = CheckPriceable(intro, a);
  ASSERT_TRUE(system.has_value());
  EXPECT_GE(system->price, Rational(1, 2));
  EXPECT_TRUE(SupportsCommittee(intro, a, *system));
}

}  // namespace
}  // namespace abclab
