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

// The five extraction procedures. Each is a pure function of the corpus
// and its parameters and returns a staging that can be reviewed, edited
// and later committed by the session.

#ifndef SHEETGRAPH_EXTRACTORS_H_
#define SHEETGRAPH_EXTRACTORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheetgraph/corpus.h"
#include "sheetgraph/rdf.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {

// A selected cell that produced nothing, with the reason.
struct StagedMiss {
  CellRef ref;
  std::string reason;
};

// ---------------------------------------------------------------------------
// Descriptive statistics

struct StatsParams {
  std::optional<std::string> transform;  // TransformExpr source
  bool include_struck = true;
  Resource property = vocab::matches();
  // Class the created resources are typed with (or subclassed from when
  // as_subclass is set). Its local name is also the minting kind.
  std::optional<Resource> type_or_subclass;
  bool as_subclass = false;
};

struct Occurrence {
  CellRef ref;
  bool struck = false;
  bool operator==(const Occurrence &) const = default;
};

struct StatRow {
  std::string value;
  std::size_t count = 0;
  bool create = true;
  std::string preferred_label;
  std::vector<std::string> alt_labels;
  std::string comment;
  std::vector<Occurrence> occurrences;  // one per counted value occurrence
};

struct StatSummary {
  StatsParams params;
  std::vector<StatRow> rows;  // first-appearance order, values distinct
  std::vector<StagedMiss> misses;
  std::vector<CellRef> skipped;  // non-text cells
};

// Text cells are transformed run-group by run-group: a cell without struck
// text is transformed as a whole; a cell with struck runs has each run
// transformed separately so every value knows whether it was struck.
// Values are trimmed and empty values dropped. Throws kParameter when the
// selection is empty or the transform does not compile.
StatSummary descriptive_statistics(const Corpus &corpus, const Selection &selection,
                                   const StatsParams &params);

// ---------------------------------------------------------------------------
// Regular expressions

enum class RegexMode { kLiteral, kConstant };

struct RegexParams {
  std::string pattern;  // Perl syntax
  RegexMode mode = RegexMode::kLiteral;
  int group = 0;                            // literal mode
  Datatype datatype = Datatype::kString;    // literal mode
  std::optional<Resource> constant;         // constant mode
  // Defaults: hasLiteral in literal mode, typeHint in constant mode.
  std::optional<Resource> property;
  std::optional<Resource> remainder_property;

  Resource effective_property() const;
};

struct RegexMatch {
  CellRef ref;
  std::string extracted;               // group text (literal) or match text
  std::optional<Literal> literal;      // literal mode
  std::string remainder;               // text outside the match, trimmed
  bool struck = false;                 // extracted span touches a struck run
  bool remainder_struck = false;
};

struct RegexStaging {
  RegexParams params;
  std::vector<RegexMatch> matched;
  std::vector<StagedMiss> missed;
  std::vector<CellRef> skipped;  // non-text cells
};

// First (leftmost) match per text cell. Throws kParameter for invalid
// patterns, a group index the pattern lacks, or constant mode without a
// constant.
RegexStaging regex_extract(const Corpus &corpus, const Selection &selection,
                           const RegexParams &params);

// ---------------------------------------------------------------------------
// Dates

// roles holds one letter per capture group: Y year, M numeric month,
// N month name, D day, _ ignored. A missing day defaults to 1.
struct DatePattern {
  std::string regex;
  std::string roles = "YMD";
};

struct DateParams {
  Resource property;
  std::vector<DatePattern> patterns;
  std::string epoch = "1970-01-01";
};

struct DateHit {
  CellRef ref;
  std::string iso_date;
  std::optional<std::size_t> pattern;  // nullopt for serial conversions
  bool struck = false;
};

struct DateStaging {
  DateParams params;
  std::vector<DateHit> hits;
  std::vector<StagedMiss> outliers;
};

// Throws kParameter for invalid patterns, roles that do not fit the group
// count, or an invalid epoch.
DateStaging date_extract(const Corpus &corpus, const Selection &selection,
                         const DateParams &params);

// Epoch plus whole days, as YYYY-MM-DD. Throws kParameter for a bad epoch.
std::string add_days(const std::string &epoch, std::int64_t days);

// ---------------------------------------------------------------------------
// Persons

struct PersonMention {
  CellRef ref;
  std::string surface;  // as written, comment prefix removed
  bool struck = false;
  std::string comment;  // stripped "(...)" prefix, if any
  bool operator==(const PersonMention &) const = default;
};

struct PersonRecord {
  std::string id;
  std::optional<std::string> first_name;
  std::string last_name;
  std::vector<PersonMention> mentions;
  bool needs_review = false;

  // "First Last", or the last name alone.
  std::string label() const;
};

struct PersonIndex {
  std::vector<PersonRecord> records;
  std::size_t next_id = 1;

  const PersonRecord *find(const std::string &id) const;
  PersonRecord *find(const std::string &id);
};

enum class PersonEditKind { kSwapNames, kMerge, kAddMention, kRemoveMention, kRemovePerson };

struct PersonEdit {
  PersonEditKind kind = PersonEditKind::kSwapNames;
  std::string person;  // id_a for merge
  std::string other;   // id_b for merge
  std::optional<CellRef> ref;
  std::string surface;
};

// Parsed name parts of one surface form.
struct NameParts {
  std::optional<std::string> first;
  std::string last;
};
// "Last, First" with a comma; otherwise the last token is the last name.
NameParts parse_person_name(std::string_view surface);

PersonIndex person_extract(const Corpus &corpus, const Selection &selection);

// Throws kEdit for unknown ids, mentions that do not exist, surfaces that
// do not occur in the cell, or swaps that would leave no last name. Records
// whose names coincide after the edit are merged into the older one.
void apply_person_edit(const Corpus &corpus, PersonIndex &index, const PersonEdit &edit);

// ---------------------------------------------------------------------------
// Relationships

enum class JoinCondition { kPrefix, kEqual, kSuffix, kCustom };

struct RelationshipParams {
  std::string regex_a;
  std::string regex_b;
  JoinCondition condition = JoinCondition::kPrefix;
  int group_a = 1;  // custom join only
  int group_b = 1;
};

struct RelationshipPair {
  CellRef a;
  CellRef b;
  bool struck = false;
};

struct RelationshipStaging {
  RelationshipParams params;
  std::vector<CellRef> group_a;
  std::vector<CellRef> group_b;
  std::vector<RelationshipPair> pairs;
  std::vector<StagedMiss> warnings;  // cells matching both regexes
  std::size_t comparisons = 0;
};

// Comparison keys are capture group 1 when the regex has groups, else the
// trimmed cell text. prefix: key_b starts with key_a; suffix: key_b ends
// with key_a. Throws kParameter for invalid regexes or custom groups.
RelationshipStaging relationship_discover(const Corpus &corpus, const Selection &selection,
                                          const RelationshipParams &params);

// ---------------------------------------------------------------------------

std::string_view regex_mode_name(RegexMode mode);
RegexMode parse_regex_mode(std::string_view name);
std::string_view join_condition_name(JoinCondition condition);
JoinCondition parse_join_condition(std::string_view name);
std::string_view person_edit_name(PersonEditKind kind);
PersonEditKind parse_person_edit(std::string_view name);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_EXTRACTORS_H_
