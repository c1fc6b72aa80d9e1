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

#include "repro.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "abclab/axioms.h"
#include "abclab/generators.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"
#include "suites.h"

namespace abclab::lab {
namespace {

constexpr std::uint64_t kTableSeed = 20200101;
constexpr int kTableInstances = 100;

std::string Vector(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string Fractions(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += values[i].ToString();
  }
  return out;
}

std::string Bool(bool value) { return value ? "true" : "false"; }

// Multiset of a welfare vector as "value×count" pairs, largest value first.
std::string Histogram(const WelfareVector& welfare) {
  std::map<int, int, std::greater<>> counts;
  for (int w : welfare) ++counts[w];
  std::string out;
  for (const auto& [value, count] : counts) {
    if (!out.empty()) out += " ";
    out += std::to_string(value) + "x" + std::to_string(count);
  }
  return out;
}

Committee Labeled(FixtureId id, std::string_view label) {
  for (auto& [name, committee] : FixtureCommittees(id)) {
    if (name == label) return committee;
  }
  throw std::logic_error("fixture has no committee " + std::string(label));
}

class Recorder {
 public:
  explicit Recorder(ReproReport& report) : report_(report) {}

  void Section(std::string name) { section_ = std::move(name); }

  void Expect(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    report_.checks.push_back(ReproCheck{section_, std::move(name),
                                        std::move(expected), std::move(actual),
                                        pass});
  }

  void ExpectTrue(std::string name, bool actual) {
    Expect(std::move(name), "true", Bool(actual));
  }

 private:
  ReproReport& report_;
  std::string section_;
};

void Phragmen1899(Recorder& r) {
  r.Section("phragmen1899");
  const ElectionInstance instance = Fixture(FixtureId::kPhragmen1899);
  const Committee pav = Labeled(FixtureId::kPhragmen1899, "pav");
  const Committee mixed = Labeled(FixtureId::kPhragmen1899, "mixed");
  r.Expect("PAV score of {a,b1,b2,b3,c1}", "7750",
           PavScore(instance, mixed).ToString());
  r.Expect("PAV score of {a,b1,b2,b3,b4}", "7850",
           PavScore(instance, pav).ToString());
  std::string winners;
  for (const Committee& w : PavWinners(instance)) {
    winners += (winners.empty() ? "" : " | ") + w.ToString();
  }
  r.Expect("PAV winners", pav.ToString(), winners);
}

void Example21(Recorder& r) {
  r.Section("example21");
  const ElectionInstance instance = Fixture(FixtureId::kExample21);
  const PhragmenTrace trace = PhragmenSequential(instance);
  std::vector<Rational> expected{Rational(15, 48)};
  for (const Rational& step :
       {Rational(9, 32), Rational(25, 128), Rational(81, 256)}) {
    expected.push_back(expected.back() + step);
  }
  r.Expect("Phragmén election times", Fractions(expected),
           Fractions(trace.election_times));
  r.Expect("Phragmén committee", "1,2,4,5", trace.committee().ToString());
}

void Example22(Recorder& r) {
  r.Section("example22");
  const ElectionInstance instance = Fixture(FixtureId::kExample22);
  const RuleXTrace trace = RuleX(instance);
  r.Expect("Rule X q-values",
           Fractions({Rational(15, 48), Rational(15, 48), Rational(15, 40),
                      Rational(1)}),
           Fractions(trace.q_values));
  r.Expect("Rule X committee", "1,2,3,4", trace.committee().ToString());

  RuleXOptions forced;
  forced.forced_picks[2] = 3;  // c4 as the third pick
  const RuleXTrace branch = RuleX(instance, forced);
  r.Expect("Rule X with c4 third", "1,2,4", branch.committee().ToString());
  forced.completion = Completion::kPhragmenContinuation;
  const RuleXTrace completed = RuleX(instance, forced);
  r.Expect("c4 branch completed by Phragmén", "1,2,3,4",
           completed.committee().ToString());
}

void Intro(Recorder& r) {
  r.Section("intro");
  const ElectionInstance instance = Fixture(FixtureId::kIntro);
  const Committee a = Labeled(FixtureId::kIntro, "a");
  const Committee b = Labeled(FixtureId::kIntro, "b");
  r.Expect("Phragmén welfare", "(4,4,4,2,2,2)",
           Vector(ComputeWelfare(instance, PhragmenSequential(instance).committee())));
  r.Expect("Rule X welfare", "(4,4,4,2,2,2)",
           Vector(ComputeWelfare(instance, RuleX(instance).committee())));
  for (const Committee& w : PavWinners(instance)) {
    r.Expect("PAV welfare of " + w.ToString(), "(3,3,3,3,3,3)",
             Vector(ComputeWelfare(instance, w)));
  }
  r.ExpectTrue("committee (a) priceable",
               CheckPriceable(instance, a).has_value());
  r.ExpectTrue("committee (a) laminar proportional",
               CheckLaminarProportional(instance, a));
  r.Expect("committee (b) priceable", "false",
           Bool(CheckPriceable(instance, b).has_value()));
  r.Expect("committee (b) laminar proportional", "false",
           Bool(CheckLaminarProportional(instance, b)));
  const auto deviation = FindCoreDeviation(instance, b, Rational(1));
  r.Expect("core deviation against (b)", "S=1,2,3",
           deviation ? "S=" + IndexList(deviation->coalition) : "none");
  const auto price_eq =
      CheckCoreSubjectTo(instance, b, DeviationProperty::kPriceEq);
  r.ExpectTrue("(b) blocked by an equal-payment deviation",
               price_eq.has_value());
}

void Fig3(Recorder& r) {
  r.Section("fig3");
  const ElectionInstance instance = Fixture(FixtureId::kFig3);
  const int m = instance.num_candidates();
  const int k = instance.committee_size();
  int total = 0, lacking = 0, lacking_blocked = 0, core = 0, core_with_pd = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Candidate> members;
    for (int c = 0; c < m; ++c) {
      if (pick[c]) members.push_back(c);
    }
    const Committee w(std::move(members));
    ++total;
    const bool shape = w.Contains(0) && w.Contains(1) && w.Contains(2) &&
                       (w.Contains(3) || w.Contains(4) || w.Contains(5));
    const bool blocked = FindCoreDeviation(instance, w, Rational(1)).has_value();
    if (!shape) {
      ++lacking;
      lacking_blocked += blocked ? 1 : 0;
    }
    if (!blocked) {
      ++core;
      core_with_pd += CheckPigouDalton(instance, w).has_value() ? 1 : 0;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  r.Expect("size-12 committees", "455", std::to_string(total));
  r.Expect("committees without c1,c2,c3 + one of c4..c6 that are blocked",
           std::to_string(lacking), std::to_string(lacking_blocked));
  r.ExpectTrue("some committee is in the core", core > 0);
  r.Expect("core committees admitting a Pigou–Dalton transfer",
           std::to_string(core), std::to_string(core_with_pd));
}

void Laminar3x(Recorder& r) {
  r.Section("laminar examples");
  for (FixtureId id :
       {FixtureId::kExample31, FixtureId::kExample32, FixtureId::kExample33}) {
    const ElectionInstance instance = Fixture(id);
    const std::string name(ToString(id));
    r.ExpectTrue(name + " laminar", CheckLaminar(instance).has_value());
    r.ExpectTrue(name + " green committee laminar proportional",
                 CheckLaminarProportional(instance, Labeled(id, "green")));
  }
  const ElectionInstance example32 = Fixture(FixtureId::kExample32);
  r.Expect("example32 PAV committee laminar proportional", "false",
           Bool(CheckLaminarProportional(
               example32, Labeled(FixtureId::kExample32, "pav"))));
  // PAV ties here: the labeled committee must be one of the optimal ones.
  const Committee pav = Labeled(FixtureId::kExample32, "pav");
  const std::vector<Committee> winners = PavWinners(example32);
  r.ExpectTrue("example32 PAV winners include " + pav.ToString(),
               std::find(winners.begin(), winners.end(), pav) != winners.end());
}

void WelfareVectorPair(Recorder& r) {
  r.Section("thm32");
  const std::string w1 = "(6,6,6,6,6,6,6,6)";
  const std::string w2 = "(7,7,7,7,5,5,5,5)";
  const ElectionInstance one = Fixture(FixtureId::kThm32Instance1);
  const ElectionInstance two = Fixture(FixtureId::kThm32Instance2);
  const auto tree_one = CheckLaminar(one);
  const auto tree_two = CheckLaminar(two);
  r.ExpectTrue("instance 1 laminar", tree_one.has_value());
  r.ExpectTrue("instance 2 laminar", tree_two.has_value());
  if (!tree_one || !tree_two) return;
  std::set<std::string> induced;
  for (const Committee& w : LaminarProportionalCommittees(*tree_one)) {
    induced.insert(Vector(ComputeWelfare(one, w)));
  }
  std::string joined;
  for (const std::string& v : induced) joined += (joined.empty() ? "" : " ") + v;
  r.Expect("instance 1: welfare of every laminar-proportional committee", w1,
           joined);
  const auto unique = LaminarProportionalCommittees(*tree_two);
  r.Expect("instance 2: laminar-proportional committees", "1",
           std::to_string(unique.size()));
  if (!unique.empty()) {
    r.Expect("instance 2: welfare of that committee", w2,
             Vector(ComputeWelfare(two, unique.front())));
  }
  // Achievability of both vectors in both instances, via the drawn committees.
  std::set<std::string> in_one, in_two;
  for (const auto& [label, w] : FixtureCommittees(FixtureId::kThm32Instance1)) {
    in_one.insert(Vector(ComputeWelfare(one, w)));
  }
  for (const auto& [label, w] : FixtureCommittees(FixtureId::kThm32Instance2)) {
    in_two.insert(Vector(ComputeWelfare(two, w)));
  }
  r.ExpectTrue("instance 1 achieves w1 and w2",
               in_one.count(w1) == 1 && in_one.count(w2) == 1);
  r.ExpectTrue("instance 2 achieves w1 and w2",
               in_two.count(w1) == 1 && in_two.count(w2) == 1);
}

void Example41(Recorder& r) {
  r.Section("example41");
  const ElectionInstance instance = Fixture(FixtureId::kExample41);
  const Committee blue = Labeled(FixtureId::kExample41, "blue");
  const Committee green = Labeled(FixtureId::kExample41, "green");
  r.ExpectTrue("blue priceable", CheckPriceable(instance, blue).has_value());
  r.ExpectTrue("green Pareto-dominates blue",
               ParetoDominates(ComputeWelfare(instance, green),
                               ComputeWelfare(instance, blue)));
}

void Fig2(Recorder& r) {
  r.Section("fig2");
  for (FixtureId id : {FixtureId::kFig2Profile1, FixtureId::kFig2Profile2}) {
    const ElectionInstance instance = Fixture(id);
    const bool swapped = id == FixtureId::kFig2Profile2;
    const Committee w = PhragmenSequential(instance).committee();
    const WelfareVector welfare = ComputeWelfare(instance, w);
    // The six voters whose candidates nobody else approves.
    const int lonely = swapped ? 0 : 6;
    const int crowded = swapped ? 6 : 0;
    bool four_or_five = true;
    for (int v = lonely; v < lonely + 6; ++v) {
      four_or_five = four_or_five && (welfare[v] == 4 || welfare[v] == 5);
    }
    int shared_side = 0;
    for (Candidate c : w) {
      for (Voter v : instance.approvers(c)) {
        if (v >= crowded && v < crowded + 6) {
          ++shared_side;
          break;
        }
      }
    }
    const std::string name(ToString(id));
    r.Expect(name + ": Phragmén committee size", "57", std::to_string(w.size()));
    r.ExpectTrue(name + ": priceable", CheckPriceable(instance, w).has_value());
    r.ExpectTrue(name + ": isolated voters hold 4 or 5 members", four_or_five);
    r.ExpectTrue(name + ": at least 27 members approved by the other six",
                 shared_side >= 27);
  }
}

void Fig4(Recorder& r) {
  r.Section("fig4");
  const ElectionInstance two = Fixture(FixtureId::kFig4Profile2);
  const Committee colored = Labeled(FixtureId::kFig4Profile2, "colored");
  r.Expect("profile 2: colored committee size",
           std::to_string(two.committee_size()), std::to_string(colored.size()));
  r.Expect("profile 2: colored committee welfare", "7x3 6x7 5x6",
           Histogram(ComputeWelfare(two, colored)));
  const ElectionInstance three = Fixture(FixtureId::kFig4Profile3);
  const Committee blue = Labeled(FixtureId::kFig4Profile3, "blue");
  r.Expect("profile 3: blue committee size",
           std::to_string(three.committee_size()), std::to_string(blue.size()));
  const WelfareVector welfare = ComputeWelfare(three, blue);
  const long sevens = std::count(welfare.begin(), welfare.end(), 7);
  r.ExpectTrue("profile 3: even number of voters with 7 members (" +
                   Histogram(welfare) + ")",
               sevens > 0 && sevens % 2 == 0);
}

void PropB1(Recorder& r) {
  r.Section("propB1");
  const ElectionInstance instance = Fixture(FixtureId::kPropB1);
  const Committee c1 = Labeled(FixtureId::kPropB1, "C1");
  const Committee c2 = Labeled(FixtureId::kPropB1, "C2");
  const Committee w = RuleX(instance).committee();
  r.Expect("Rule X committee", c1.ToString(), w.ToString());

  // S = V1' ∪ V2' ∪ V3: voters 1-40, 57-96 and 113-160.
  Deviation deviation;
  for (Voter v = 0; v < 160; ++v) {
    if (v < 40 || (v >= 56 && v < 96) || v >= 112) {
      deviation.coalition.push_back(v);
    }
  }
  deviation.alternative = c2.members();
  deviation.kind = DeviationKind::kPriceable;
  r.ExpectTrue("(S, C2) is a core deviation",
               VerifyDeviation(instance, w, deviation, Rational(1)));

  const int t = static_cast<int>(deviation.alternative.size());
  const ElectionInstance restricted =
      RestrictProfile(instance, deviation.coalition, t);
  PriceSystem system{Rational(8), {}};
  system.payments.resize(restricted.num_voters());
  for (Voter v = 0; v < restricted.num_voters(); ++v) {
    for (Candidate c : c2) {
      if (!restricted.Approves(v, c)) continue;
      if (v < 80) system.payments[v][c] = Rational(1, 8);
      if (v >= 80) system.payments[v][c] = Rational(1, 2);
    }
  }
  r.ExpectTrue("payments 1/8 (V1', V2') and 1/2 (V3) support C2 at price 8",
               SupportsCommittee(restricted, c2, system));
  r.ExpectTrue("restricted instance priceable",
               DeviationHasProperty(instance, deviation,
                                    DeviationProperty::kPriceable));
}

void Families(Recorder& r) {
  r.Section("families");
  const ElectionInstance family = GeneratePigouDaltonCoreFamily(4, 2);
  r.Expect("x=4, y=2: n m k", "12 26 18",
           std::to_string(family.num_voters()) + " " +
               std::to_string(family.num_candidates()) + " " +
               std::to_string(family.committee_size()));
  r.Expect("x=4, y=2: entitlement of the first group", "6",
           Rational(family.committee_size() * 4, family.num_voters()).ToString());

  for (int x = 2; x <= 4; ++x) {
    const RuleXLowerBound bound =
        GenerateRuleXCoreLowerBound(x, MinimalLowerBoundScale(x));
    const Committee w = RuleX(bound.instance).committee();
    Deviation deviation{bound.coalition, bound.alternative,
                        DeviationKind::kLambdaCore};
    const auto ratio = DeviationGainRatio(bound.instance, w, deviation);
    const std::string label = "x=" + std::to_string(x);
    r.ExpectTrue(label + ": (S, R) verified as a deviation",
                 VerifyDeviation(bound.instance, w, deviation, Rational(1)));
    r.ExpectTrue(label + ": gain ratio " + (ratio ? ratio->ToString() : "none") +
                     " >= x - 1",
                 ratio && *ratio >= Rational(x - 1));
  }

  const std::vector<std::pair<std::vector<int>, int>> dhondt = {
      {{5, 3, 1}, 3}, {{30, 30, 40}, 10}};
  const std::vector<std::string> seats = {"(2,1,0)", "(3,3,4)"};
  for (std::size_t i = 0; i < dhondt.size(); ++i) {
    r.Expect("D'Hondt " + Vector(dhondt[i].first) + " k=" +
                 std::to_string(dhondt[i].second),
             seats[i], Vector(DHondt(dhondt[i].first, dhondt[i].second)));
  }
}

void OverlapExamples(Recorder& r) {
  r.Section("overlapping parties");
  const ElectionInstance instance = Fixture(FixtureId::kOverlappingParties);
  auto first_party = [&](const Committee& w) {
    int count = 0;
    for (Candidate c : w) count += c < 12 ? 1 : 0;
    return std::to_string(count) + "/" + std::to_string(w.size() - count);
  };
  r.Expect("Rule X seats (first/second party)", "9/3",
           first_party(RuleX(instance).committee()));
  r.Expect("Phragmén seats (first/second party)", "8/4",
           first_party(PhragmenSequential(instance).committee()));
  r.Expect("sequential PAV seats (first/second party)", "8/4",
           first_party(SequentialPav(instance)));

  r.Section("remarkA1");
  const ElectionInstance remark = Fixture(FixtureId::kRemarkA1);
  const Committee w = PhragmenSequential(remark).committee();
  int singles = 0;
  for (Candidate c : w) singles += c < 3 ? 1 : 0;
  r.ExpectTrue("Phragmén picks one of c1..c3 plus c4..c8 (" + w.ToString() + ")",
               singles == 1 && w.size() == 6);
  r.Expect("D'Hondt (2,2,2,12) k=6", "(1,0,0,5)", Vector(DHondt(std::vector<int>{2, 2, 2, 12}, 6)));
}

// Desk-scale property matrix over seeded random and laminar instances.
void Table(ReproReport& report) {
  const RandomBounds bounds;
  std::ostringstream text;
  text << kTableInstances << " random instances (n <= " << bounds.max_n
       << ", m <= " << bounds.max_m << ", k <= " << bounds.max_k
       << ", seed " << kTableSeed << ") and " << kTableInstances
       << " generated laminar instances (k <= 6, <= 12 voters)";
  report.table_bounds = text.str();

  enum Column { kPav, kPhragmen, kRuleX, kColumns };
  struct Tally {
    std::string property;
    std::array<bool, kColumns> claimed;
    std::array<int, kColumns> failures{};
    std::array<int, kColumns> instances{};
  };
  std::vector<Tally> rows = {
      {"laminar proportional", {false, true, true}},
      {"priceable", {false, true, true}},
      {"PJR", {true, true, true}},
      {"EJR", {true, false, true}},
      {"core subject to equal payments", {false, false, true}},
      {"core", {false, false, false}},
      {"2-core", {true, false, false}},
      {"Pareto-optimal", {true, false, false}},
      {"Pigou–Dalton", {true, false, false}},
  };
  auto outputs = [](const ElectionInstance& instance) {
    std::array<std::vector<Committee>, kColumns> out;
    out[kPav] = PavWinners(instance);
    out[kPhragmen] = {PhragmenSequential(instance).committee()};
    out[kRuleX] = {RuleX(instance).committee()};
    return out;
  };
  auto tally = [](Tally& row, int column, bool failed) {
    ++row.instances[column];
    row.failures[column] += failed ? 1 : 0;
  };

  for (int index = 0; index < kTableInstances; ++index) {
    const ElectionInstance laminar = LaminarSuiteInstance(kTableSeed, index);
    const auto tree = CheckLaminar(laminar);
    const auto committees = outputs(laminar);
    for (int col = 0; col < kColumns; ++col) {
      bool failed = false;
      for (const Committee& w : committees[col]) {
        failed = failed || !IsLaminarProportional(*tree, w);
      }
      tally(rows[0], col, failed);
    }
  }
  for (int index = 0; index < kTableInstances; ++index) {
    const ElectionInstance instance =
        RandomSuiteInstance(kTableSeed, index, bounds);
    const auto committees = outputs(instance);
    for (int col = 0; col < kColumns; ++col) {
      std::array<bool, 9> failed{};
      for (const Committee& w : committees[col]) {
        failed[1] = failed[1] || !CheckPriceable(instance, w).has_value();
        failed[2] = failed[2] || CheckPjr(instance, w).has_value();
        failed[3] = failed[3] || CheckEjr(instance, w).has_value();
        failed[4] = failed[4] || CheckCoreSubjectTo(instance, w,
                                                    DeviationProperty::kPriceEq)
                                     .has_value();
        failed[5] = failed[5] ||
                    FindCoreDeviation(instance, w, Rational(1)).has_value();
        failed[6] = failed[6] ||
                    FindCoreDeviation(instance, w, Rational(2)).has_value();
        failed[7] = failed[7] || CheckPareto(instance, w).has_value();
        failed[8] = failed[8] || CheckPigouDalton(instance, w).has_value();
      }
      for (std::size_t row = 1; row < rows.size(); ++row) {
        tally(rows[row], col, failed[row]);
      }
    }
  }
  for (const Tally& row : rows) {
    TableRow out{row.property, {}, {}, {}};
    for (int col = 0; col < kColumns; ++col) {
      const int failures = row.failures[col];
      out.cells.push_back(failures == 0
                              ? "yes"
                              : "no (" + std::to_string(failures) + "/" +
                                    std::to_string(row.instances[col]) + ")");
      out.claimed.push_back(row.claimed[col]);
      out.consistent.push_back(!row.claimed[col] || failures == 0);
    }
    report.table.push_back(std::move(out));
  }
}

}  // namespace

bool ReproReport::ok() const {
  for (const ReproCheck& check : checks) {
    if (!check.pass) return false;
  }
  for (const TableRow& row : table) {
    for (bool consistent : row.consistent) {
      if (!consistent) return false;
    }
  }
  return true;
}

ReproReport RunRepro() {
  ReproReport report;
  Recorder r(report);
  Phragmen1899(r);
  Example21(r);
  Example22(r);
  Intro(r);
  Fig3(r);
  Laminar3x(r);
  WelfareVectorPair(r);
  Example41(r);
  Fig2(r);
  Fig4(r);
  PropB1(r);
  Families(r);
  OverlapExamples(r);
  Table(report);
  return report;
}

void PrintRepro(const ReproReport& report, std::ostream& out) {
  std::string section;
  for (const ReproCheck& check : report.checks) {
    if (check.section != section) {
      section = check.section;
      out << "== " << section << " ==\n";
    }
    out << (check.pass ? "PASS " : "FAIL ") << check.name << ": "
        << check.actual << "\n";
    if (!check.pass) {
      out << "  - expected " << check.expected << "\n"
          << "  + actual   " << check.actual << "\n";
    }
  }
  out << "== property table (desk-scale evidence, not proof) ==\n"
      << "bounds: " << report.table_bounds << "\n";
  std::size_t width = 0;
  for (const TableRow& row : report.table) {
    width = std::max(width, row.property.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << pad("", width) << "  " << pad("PAV", 16) << pad("Phragmen", 16)
      << "Rule X\n";
  for (const TableRow& row : report.table) {
    out << pad(row.property, width) << "  ";
    for (std::size_t col = 0; col < row.cells.size(); ++col) {
      std::string cell = row.cells[col] + (row.claimed[col] ? " *" : "");
      if (!row.consistent[col]) cell += " MISMATCH";
      out << (col + 1 < row.cells.size() ? pad(cell, 16) : cell);
    }
    out << "\n";
  }
  out << "(* = asserted by the property table)\n";
  out << (report.ok() ? "repro: all reproductions PASS\n"
                      : "repro: MISMATCH\n");
}

}  // namespace abclab::lab
