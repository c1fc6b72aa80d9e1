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

#include "cli.h"

#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abclab/axioms.h"
#include "abclab/errors.h"
#include "abclab/generators.h"
#include "abclab/instance.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"
#include "json.hpp"
#include "repro.h"
#include "search.h"

namespace abclab::lab {
namespace {

using nlohmann::ordered_json;

struct CommonFlags {
  bool json = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct Verdict {
  bool pass = false;
  std::string witness;  // empty on PASS unless there is something to show
};

struct CheckFlags {
  std::string axiom;
  std::string lambda = "1";
  std::string property = "price-eq";
  std::string ratio = "original";
  std::string quota = "seats";
};

std::string Vector(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(values[i]);
  }
  return out + ")";
}

ordered_json Fractions(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const Rational& value : values) out.push_back(value.ToString());
  return out;
}

std::string RenderDeviation(const Deviation& deviation) {
  return "S=" + IndexList(deviation.coalition) +
         " T=" + IndexList(deviation.alternative) + " (" +
         std::string(ToString(deviation.kind)) + ")";
}

void DescribeNode(const LaminarNode& node, int depth, std::ostream& out) {
  static const char* kKinds[] = {"unanimous", "common", "split"};
  out << std::string(2 * depth, ' ') << kKinds[static_cast<int>(node.kind)]
      << " voters=" << IndexList(node.voters) << " seats=" << node.seats;
  if (!node.candidates.empty()) out << " candidates=" << IndexList(node.candidates);
  out << "\n";
  for (const LaminarNode& child : node.children) {
    DescribeNode(child, depth + 1, out);
  }
}

DeviationProperty ParseProperty(const std::string& name) {
  if (name == "cohesive") return DeviationProperty::kCohesive;
  if (name == "price-eq") return DeviationProperty::kPriceEq;
  if (name == "priceable") return DeviationProperty::kPriceable;
  throw std::invalid_argument("unknown property '" + name + "'");
}

Verdict Evaluate(const CheckFlags& flags, const ElectionInstance& instance,
                 const Committee& committee, std::uint64_t budget) {
  auto from = [](const std::optional<Deviation>& deviation) {
    return deviation ? Verdict{false, RenderDeviation(*deviation)}
                     : Verdict{true, ""};
  };
  const std::string& axiom = flags.axiom;
  if (axiom == "priceable") {
    if (auto system = CheckPriceable(instance, committee)) {
      return {true, "price " + system->price.ToString()};
    }
    return {false, "no price system supports the committee"};
  }
  if (axiom == "laminar") {
    if (auto tree = CheckLaminar(instance)) {
      std::ostringstream text;
      DescribeNode(tree->root, 0, text);
      std::string out = text.str();
      if (!out.empty()) out.pop_back();
      return {true, out};
    }
    return {false, "no laminar derivation"};
  }
  if (axiom == "laminar-prop") {
    return {CheckLaminarProportional(instance, committee), ""};
  }
  if (axiom == "pjr") {
    PjrQuota quota;
    if (flags.quota == "seats") {
      quota = PjrQuota::kSeats;
    } else if (flags.quota == "committee") {
      quota = PjrQuota::kCommitteeSize;
    } else {
      throw std::invalid_argument("--quota must be seats or committee");
    }
    return from(CheckPjr(instance, committee, quota, budget));
  }
  if (axiom == "ejr") return from(CheckEjr(instance, committee, budget));
  if (axiom == "core") {
    return from(FindCoreDeviation(instance, committee, Rational(1), budget));
  }
  if (axiom == "lambda-core") {
    return from(FindCoreDeviation(instance, committee,
                                  Rational::Parse(flags.lambda), budget));
  }
  if (axiom == "core-subject") {
    CoreSubjectOptions options;
    options.budget = budget;
    if (flags.ratio == "original") {
      options.ratio = PriceEqRatio::kOriginal;
    } else if (flags.ratio == "restricted") {
      options.ratio = PriceEqRatio::kRestricted;
    } else {
      throw std::invalid_argument("--ratio must be original or restricted");
    }
    return from(CheckCoreSubjectTo(instance, committee,
                                   ParseProperty(flags.property), options));
  }
  if (axiom == "pigou-dalton") {
    if (auto other = CheckPigouDalton(instance, committee, budget)) {
      return {false, "transfer to " + other->ToString() + " welfare " +
                         Vector(ComputeWelfare(instance, *other))};
    }
    return {true, ""};
  }
  if (axiom == "pareto") {
    if (auto other = CheckPareto(instance, committee, budget)) {
      return {false, "dominated by " + other->ToString() + " welfare " +
                         Vector(ComputeWelfare(instance, *other))};
    }
    return {true, ""};
  }
  throw std::invalid_argument("unknown axiom '" + axiom + "'");
}

// Party-list structure: voters with identical ballots form a party and
// different parties' ballots are disjoint. Parties are ordered by their
// lowest candidate.
std::vector<std::pair<Ballot, int>> Parties(const ElectionInstance& instance) {
  std::map<Ballot, int> counts;
  for (const Ballot& ballot : instance.ballots()) {
    if (ballot.empty()) {
      throw std::invalid_argument("dhondt needs non-empty ballots");
    }
    ++counts[ballot];
  }
  std::vector<int> owner(instance.num_candidates(), -1);
  int index = 0;
  for (const auto& [ballot, count] : counts) {
    for (Candidate c : ballot) {
      if (owner[c] >= 0) {
        throw std::invalid_argument("dhondt needs a party-list instance");
      }
      owner[c] = index;
    }
    ++index;
  }
  return {counts.begin(), counts.end()};
}

ordered_json RunRule(const std::string& rule, const ElectionInstance& instance,
                     bool all_ties, std::uint64_t budget) {
  ordered_json report;
  report["instance_digest"] = InstanceDigest(instance);
  report["rule"] = rule;
  ordered_json committees = ordered_json::array();
  ordered_json trace = ordered_json::object();
  auto add = [&](const Committee& w) {
    ordered_json entry;
    entry["committee"] = w.ToString();
    entry["welfare"] = ComputeWelfare(instance, w);
    if (rule == "pav" || rule == "seqpav") {
      entry["pav_score"] = PavScore(instance, w).ToString();
    }
    committees.push_back(std::move(entry));
  };
  if (rule == "pav") {
    std::vector<Committee> winners = PavWinners(instance, budget);
    trace["tied_winners"] = winners.size();
    if (!all_ties) winners.resize(1);
    for (const Committee& w : winners) add(w);
  } else if (rule == "seqpav") {
    add(SequentialPav(instance));
  } else if (rule == "phragmen") {
    const PhragmenTrace t = PhragmenSequential(instance);
    add(t.committee());
    ordered_json order = ordered_json::array();
    for (Candidate c : t.elected) order.push_back(c + 1);
    trace["order"] = order;
    trace["times"] = Fractions(t.election_times);
    ordered_json payments = ordered_json::array();
    for (const auto& step : t.payments) {
      ordered_json paid = ordered_json::object();
      for (const auto& [voter, amount] : step) {
        paid[std::to_string(voter + 1)] = amount.ToString();
      }
      payments.push_back(std::move(paid));
    }
    trace["payments"] = payments;
  } else if (rule == "rulex" || rule == "rulex-complete") {
    const RuleXTrace t =
        rule == "rulex"
            ? RuleX(instance)
            : RuleXComplete(instance, Completion::kPhragmenContinuation);
    add(t.committee());
    ordered_json order = ordered_json::array();
    for (Candidate c : t.elected) order.push_back(c + 1);
    trace["order"] = order;
    trace["q_values"] = Fractions(t.q_values);
    if (!t.budgets.empty()) trace["final_budgets"] = Fractions(t.budgets.back());
    trace["continuation_times"] = Fractions(t.continuation_times);
    trace["completed"] = t.completed;
  } else if (rule == "dhondt") {
    const auto parties = Parties(instance);
    std::vector<int> sizes;
    for (const auto& party : parties) sizes.push_back(party.second);
    const std::vector<int> seats = DHondt(sizes, instance.committee_size());
    std::vector<Candidate> members;
    for (std::size_t z = 0; z < parties.size(); ++z) {
      const Ballot& ballot = parties[z].first;
      if (seats[z] > static_cast<int>(ballot.size())) {
        throw std::invalid_argument("a party has fewer candidates than seats");
      }
      members.insert(members.end(), ballot.begin(), ballot.begin() + seats[z]);
    }
    add(Committee(std::move(members)));
    trace["party_sizes"] = sizes;
    trace["seats"] = seats;
  } else {
    throw std::invalid_argument("unknown rule '" + rule + "'");
  }
  report["committees"] = committees;
  report["trace"] = trace;
  return report;
}

void PrintRunReport(const ordered_json& report, std::ostream& out) {
  out << "instance_digest: " << report["instance_digest"].get<std::string>()
      << "\n"
      << "rule: " << report["rule"].get<std::string>() << "\n";
  for (const auto& entry : report["committees"]) {
    out << "committee: " << entry["committee"].get<std::string>() << "\n";
    out << "welfare: " << Vector(entry["welfare"].get<std::vector<int>>())
        << "\n";
    if (entry.contains("pav_score")) {
      out << "pav_score: " << entry["pav_score"].get<std::string>() << "\n";
    }
  }
  const ordered_json& trace = report["trace"];
  for (const auto& [key, value] : trace.items()) {
    if (key == "payments") {
      int step = 1;
      for (const auto& paid : value) {
        out << "payments " << step++ << ":";
        for (const auto& [voter, amount] : paid.items()) {
          out << " v" << voter << "=" << amount.get<std::string>();
        }
        out << "\n";
      }
    } else if (value.is_array()) {
      std::string line;
      for (const auto& item : value) {
        line += (line.empty() ? "" : " ") +
                (item.is_string() ? item.get<std::string>() : item.dump());
      }
      out << key << ": " << line << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
  if (report.contains("verdicts")) {
    for (const auto& [axiom, verdict] : report["verdicts"].items()) {
      out << "verdict " << axiom << ": "
          << (verdict["pass"].get<bool>() ? "PASS" : "FAIL");
      const std::string witness = verdict["witness"].get<std::string>();
      if (!witness.empty()) out << " " << witness;
      out << "\n";
    }
  }
}

std::vector<std::string> Split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"abclab: approval-based committee rules, axioms and searches"};
  app.require_subcommand(1);
  CommonFlags common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "machine-readable output");
    sub->add_option("--budget", common.budget,
                    "node budget for exhaustive searches");
  };

  std::string input;
  std::string rule;
  bool all_ties = false;
  std::string verdicts;
  CLI::App* run = app.add_subcommand("run", "run a rule on an instance file");
  run->add_option("--rule", rule, "pav|seqpav|phragmen|rulex|rulex-complete|dhondt")
      ->required();
  run->add_option("--input", input, "instance file")->required();
  run->add_flag("--all-ties", all_ties, "print every optimal PAV committee");
  run->add_option("--verdicts", verdicts,
                  "comma-separated axioms to check on each committee");
  add_common(run);

  CheckFlags check_flags;
  std::string committee_text;
  CLI::App* check = app.add_subcommand("check", "check an axiom");
  check->add_option("--axiom", check_flags.axiom,
                    "priceable|laminar|laminar-prop|pjr|ejr|core|lambda-core|"
                    "core-subject|pigou-dalton|pareto")
      ->required();
  check->add_option("--input", input, "instance file")->required();
  check->add_option("--committee", committee_text, "e.g. 1,2,4,5");
  check->add_option("--lambda", check_flags.lambda, "lambda for lambda-core");
  check->add_option("--property", check_flags.property,
                    "cohesive|price-eq|priceable (core-subject)");
  check->add_option("--ratio", check_flags.ratio,
                    "original|restricted seat price for price-eq");
  check->add_option("--quota", check_flags.quota,
                    "seats|committee group threshold for pjr");
  add_common(check);

  std::string violation = "ejr-phragmen";
  SearchOptions search_options;
  CLI::App* search = app.add_subcommand("search", "search for counterexamples");
  search->add_option("--violation", violation, "ejr-phragmen or axiom+rule");
  search->add_option("--max-n", search_options.bounds.max_n);
  search->add_option("--max-m", search_options.bounds.max_m);
  search->add_option("--max-k", search_options.bounds.max_k);
  search->add_option("--seed", search_options.seed);
  search->add_option("--trials", search_options.trials);
  add_common(search);

  CLI::App* repro = app.add_subcommand("repro", "reproduction report");
  add_common(repro);

  std::string fixture_name;
  std::string write_dir;
  bool list = false;
  CLI::App* fixture = app.add_subcommand("fixture", "print built-in instances");
  fixture->add_option("name", fixture_name, "fixture name");
  fixture->add_flag("--list", list, "list fixture names");
  fixture->add_option("--write-all", write_dir,
                      "write every fixture as DIR/<name>.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (run->parsed()) {
      const ElectionInstance instance = ReadInstanceFile(input);
      ordered_json report = RunRule(rule, instance, all_ties, common.budget);
      if (!verdicts.empty()) {
        ordered_json all = ordered_json::object();
        for (const std::string& axiom : Split(verdicts)) {
          CheckFlags flags;
          flags.axiom = axiom;
          const Committee w =
              Committee::Parse(report["committees"][0]["committee"].get<std::string>());
          const Verdict verdict = Evaluate(flags, instance, w, common.budget);
          all[axiom] = {{"pass", verdict.pass}, {"witness", verdict.witness}};
        }
        report["verdicts"] = all;
      }
      if (common.json) {
        out << report.dump(2) << "\n";
      } else {
        PrintRunReport(report, out);
      }
      return kExitOk;
    }
    if (check->parsed()) {
      const ElectionInstance instance = ReadInstanceFile(input);
      if (committee_text.empty() && check_flags.axiom != "laminar") {
        throw std::invalid_argument("--committee is required for this axiom");
      }
      const Committee committee = Committee::Parse(committee_text);
      ValidateCommittee(instance, committee);
      const Verdict verdict =
          Evaluate(check_flags, instance, committee, common.budget);
      if (common.json) {
        ordered_json report;
        report["instance_digest"] = InstanceDigest(instance);
        report["axiom"] = check_flags.axiom;
        report["committee"] = committee.ToString();
        report["welfare"] = ComputeWelfare(instance, committee);
        report["pass"] = verdict.pass;
        report["witness"] = verdict.witness;
        out << report.dump(2) << "\n";
      } else {
        out << (verdict.pass ? "PASS" : "FAIL") << " " << check_flags.axiom;
        if (!verdict.witness.empty()) {
          out << (verdict.witness.find('\n') == std::string::npos ? " " : "\n")
              << verdict.witness;
        }
        out << "\n";
      }
      return verdict.pass ? kExitOk : kExitFail;
    }
    if (search->parsed()) {
      search_options.violation = ParseViolation(violation);
      search_options.budget = common.budget;
      const SearchResult result = RunSearch(search_options);
      ordered_json report;
      report["violation"] = ToString(search_options.violation);
      report["exhaustive_instances"] = result.exhaustive_instances;
      report["random_trials"] = result.random_trials;
      report["guided_restarts"] = result.guided_restarts;
      if (result.instance) {
        report["found"] = true;
        report["phase"] = result.phase;
        report["committee"] = result.counterexample->committee.ToString();
        report["witness"] = result.counterexample->witness;
        report["instance"] = SerializeInstance(*result.instance);
      } else {
        report["found"] = false;
      }
      if (common.json) {
        out << report.dump(2) << "\n";
      } else if (result.instance) {
        out << "# violation " << report["violation"].get<std::string>()
            << " found in " << result.phase << " phase\n"
            << "# committee " << report["committee"].get<std::string>() << "\n"
            << "# witness " << report["witness"].get<std::string>() << "\n"
            << report["instance"].get<std::string>();
      } else {
        out << "none found (" << result.exhaustive_instances
            << " exhaustive, " << result.random_trials << " random, "
            << result.guided_restarts << " guided)\n";
      }
      return kExitOk;
    }
    if (repro->parsed()) {
      const ReproReport report = RunRepro();
      if (common.json) {
        ordered_json json;
        ordered_json checks = ordered_json::array();
        for (const ReproCheck& c : report.checks) {
          checks.push_back({{"section", c.section},
                            {"name", c.name},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"pass", c.pass}});
        }
        json["checks"] = checks;
        json["table_bounds"] = report.table_bounds;
        ordered_json table = ordered_json::array();
        for (const TableRow& row : report.table) {
          table.push_back({{"property", row.property},
                           {"cells", row.cells},
                           {"claimed", row.claimed},
                           {"consistent", row.consistent}});
        }
        json["table"] = table;
        json["ok"] = report.ok();
        out << json.dump(2) << "\n";
      } else {
        PrintRepro(report, out);
      }
      return report.ok() ? kExitOk : kExitFail;
    }
    if (fixture->parsed()) {
      if (list) {
        for (FixtureId id : AllFixtures()) out << ToString(id) << "\n";
        return kExitOk;
      }
      if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        for (FixtureId id : AllFixtures()) {
          WriteInstanceFile(Fixture(id), std::filesystem::path(write_dir) /
                                             (std::string(ToString(id)) + ".txt"));
        }
        return kExitOk;
      }
      if (fixture_name.empty()) {
        throw std::invalid_argument("give a fixture name, --list or --write-all");
      }
      out << SerializeInstance(Fixture(FixtureIdFromName(fixture_name)));
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace abclab::lab
