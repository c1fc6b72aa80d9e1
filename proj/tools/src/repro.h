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

#ifndef ABCLAB_TOOLS_REPRO_H_
#define ABCLAB_TOOLS_REPRO_H_

#include <ostream>
#include <string>
#include <vector>

namespace abclab::lab {

struct ReproCheck {
  std::string section;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// One row of the desk-scale property matrix. Cells hold "yes" when no
// sampled instance failed, otherwise "no (failures/instances)"; `claimed`
// marks the cells the property table asserts.
struct TableRow {
  std::string property;
  std::vector<std::string> cells;    // PAV, Phragmén, Rule X
  std::vector<bool> claimed;
  std::vector<bool> consistent;      // false when a claimed cell failed
};

struct ReproReport {
  std::vector<ReproCheck> checks;
  std::vector<TableRow> table;
  std::string table_bounds;

  bool ok() const;
};

ReproReport RunRepro();

// PASS/FAIL line per check, a diff block for every mismatch, then the table.
void PrintRepro(const ReproReport& report, std::ostream& out);

}  // namespace abclab::lab

#endif  // ABCLAB_TOOLS_REPRO_H_
