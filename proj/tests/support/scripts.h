// Copyright 2026 The Sheetgraph Authors
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

// Scripted end-to-end sessions shared by unit, acceptance and benchmark
// code: the document-register fixture and the generated register.

#ifndef SHEETGRAPH_TESTS_SCRIPTS_H_
#define SHEETGRAPH_TESTS_SCRIPTS_H_

#include <memory>
#include <string>

#include "sheetgraph/session.h"
#include "synthetic.h"

namespace sheetgraph::testing {

// Path of a file under tests/data.
std::string data_path(const std::string &name);
std::string read_bytes(const std::string &path);

// Fixture columns.
enum FixtureColumn : std::uint32_t {
  kLine = 0,
  kDocId = 1,
  kDep = 2,
  kEditor = 3,
  kType = 4,
  kChanges = 5,
  kPublished = 6,
  kSent = 7,
};

inline constexpr const char *kFixtureSheet = "Sheet1";
inline constexpr const char *kUnixEpoch = "1970-01-01";
inline constexpr const char *kExcelEpoch = "1899-12-30";

// Project vocabulary, minted as ontology terms under the session base.
struct Terms {
  Resource department, department_class;
  Resource document_id;
  Resource attachment, document;
  Resource revision_type, revision_type_class;
  Resource change, change_entry_class;
  Resource published;
  Resource sent, sent_flag;
  Resource has_attachment;

  explicit Terms(const std::string &base_uri);
};

Selection column_selection(const std::string &workbook_id, const std::string &sheet,
                           std::uint32_t column, std::uint32_t first_row, std::uint32_t last_row);

// Parameter sets of the fixture script, reusable by single-step tests.
StatsParams department_params(const Terms &t);
RegexParams document_id_params(const Terms &t);
RegexParams attachment_hint_params(const Terms &t);
StatsParams revision_type_params(const Terms &t);
StatsParams change_params(const Terms &t);
DateParams published_params(const Terms &t, const std::string &epoch = kUnixEpoch);
RegexParams sent_params(const Terms &t);
RelationshipParams attachment_relationship_params();

struct FixtureRun {
  std::unique_ptr<Session> session;
  std::string workbook_id;
  StagedResult departments, document_ids, attachment_hints, persons, types, changes, dates, sent,
      relationships;
  CollectOutcome collected;
  LiftOutcome lifted;
};

// Loads the fixture workbook and runs every extractor, commits each
// staging, collects instances and lifts the attachment relationship.
FixtureRun run_fixture_session(const std::string &xlsx_bytes);
FixtureRun run_fixture_session();  // tests/data/table1.xlsx

struct SyntheticRun {
  std::unique_ptr<Session> session;
  std::string workbook_id;
  StagedResult departments, document_ids, attachment_hints, persons, dates, types, relationships;
  CollectOutcome collected;
  LiftOutcome lifted;
};

SyntheticRun run_synthetic_session(const SyntheticSheet &sheet);

}  // namespace sheetgraph::testing

#endif  // SHEETGRAPH_TESTS_SCRIPTS_H_
