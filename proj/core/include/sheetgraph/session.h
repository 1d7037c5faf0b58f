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

// One project's workbench: loaded workbooks, staged extractor results, the
// two graphs, and the session log from which all of it can be rebuilt.
//
// All public methods are safe to call from several threads. Mutations are
// serialized through one writer lock; reads see committed state only.

#ifndef SHEETGRAPH_SESSION_H_
#define SHEETGRAPH_SESSION_H_

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sheetgraph/collector.h"
#include "sheetgraph/corpus.h"
#include "sheetgraph/extractors.h"
#include "sheetgraph/graph.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {

inline constexpr std::string_view kDefaultBaseUri = "http://example.org/sheetgraph/project/default/";

enum class StagingKind { kStats, kRegex, kDate, kPerson, kRelationship };

std::string_view staging_kind_name(StagingKind kind);
StagingKind parse_staging_kind(std::string_view name);  // throws kParameter

struct PersonParams {};

using ExtractorParams =
    std::variant<StatsParams, RegexParams, DateParams, PersonParams, RelationshipParams>;
using StagingPayload =
    std::variant<StatSummary, RegexStaging, DateStaging, PersonIndex, RelationshipStaging>;

StagingKind kind_of(const ExtractorParams &params);

struct StagingRequest {
  Selection selection;
  ExtractorParams params;
};

struct StagedResult {
  std::string staging_id;
  StagingKind kind = StagingKind::kStats;
  StagingRequest request;
  StagingPayload payload;
  std::string created_at;
  std::optional<std::string> commit_id;  // set once committed
};

// Review edits of one statistics row, addressed by its index.
struct StatsRowEdit {
  std::size_t row = 0;
  std::optional<bool> create;
  std::optional<std::string> preferred_label;
  std::optional<std::vector<std::string>> alt_labels;
  std::optional<std::string> comment;
};

struct StatsAdjustment {
  std::vector<StatsRowEdit> rows;
  std::optional<Resource> property;
  std::optional<Resource> type_or_subclass;
  std::optional<bool> as_subclass;
};

// Statistics and person stagings accept edits; the other kinds are only
// re-run with new parameters.
using Adjustment = std::variant<StatsAdjustment, PersonEdit>;

struct CommitRecord {
  std::string commit_id;
  std::string staging_id;  // empty for collect and lift
  std::string kind;        // staging kind, "collect" or "lift"
  std::vector<Triple> matching_added;
  std::vector<Triple> knowledge_added;
  std::string timestamp;
};

struct CollectOutcome {
  InstanceReport report;
  std::string commit_id;
};

struct LiftOutcome {
  LiftReport report;
  std::string commit_id;
};

// Triples a staging would add, before set semantics are applied.
struct Materialized {
  std::vector<Triple> matching;
  std::vector<Triple> knowledge;
};

Materialized materialize(const Corpus &corpus, const Minter &minter, const StagedResult &staged);

class Session {
 public:
  explicit Session(std::string base_uri = std::string(kDefaultBaseUri));
  ~Session();

  Session(const Session &) = delete;
  Session &operator=(const Session &) = delete;

  const std::string &base_uri() const;

  // Returns the workbook id. Loading byte-identical input twice is a no-op.
  std::string load_workbook(std::string_view bytes, WorkbookFormat format);
  std::shared_ptr<const Workbook> workbook(std::string_view id) const;  // throws kLookup
  std::vector<std::shared_ptr<const Workbook>> workbooks() const;
  DeepLinkUri deep_link(const CellRef &ref) const;

  // Runs an extractor; nothing reaches the graphs until commit.
  StagedResult run(const StagingRequest &request);
  StagedResult staging(const std::string &staging_id) const;  // throws kStagingNotFound
  std::vector<std::string> staging_ids() const;
  StagedResult adjust(const std::string &staging_id, const Adjustment &adjustment);
  void discard(const std::string &staging_id);

  // Re-committing returns the original record and adds nothing.
  CommitRecord commit(const std::string &staging_id);
  CommitRecord commit_record(const std::string &commit_id) const;
  std::vector<CommitRecord> commits() const;
  // Removes exactly the recorded delta. A triple that a later commit also
  // asserted is removed as well, since the later delta did not record it.
  CommitRecord undo(const std::string &commit_id);

  // Annotations of the selected cells plus the knowledge-graph triples of
  // every resource they reference.
  Graph inspect_graph(const Selection &selection) const;
  std::string inspect(const Selection &selection, RdfFormat format = RdfFormat::kTurtle) const;

  // Deletes matching-graph triples on the selected cells, optionally only
  // those with the given predicate. Knowledge-graph resources are kept.
  std::size_t remove_annotations(const Selection &selection,
                                 const std::optional<Resource> &predicate = std::nullopt);

  // Minted resources no matching statement points to.
  std::vector<Resource> orphans() const;

  // Throws kCollectionOverlap when rows in the range were collected before
  // and rerun is false; with rerun the earlier collections are undone first.
  CollectOutcome collect(const CollectorConfig &config, bool rerun = false);
  LiftOutcome lift(const Resource &predicate);
  std::optional<InstanceReport> last_instance_report() const;

  Dataset dataset() const;
  std::size_t size(GraphName graph) const;
  std::size_t count(GraphName graph, const Pattern &pattern) const;
  std::string export_graph(GraphName graph, RdfFormat format) const;

  // JSON lines, one entry per mutating operation.
  std::string log_text() const;

  // Rebuilds a session from its log. workbook_bytes must contain the input
  // of every load_workbook entry (matched by checksum); a missing or
  // changed workbook throws kReplay, as does any commit whose recomputed
  // delta differs from the logged one. Malformed lines throw ParseError
  // with the 1-based line number. default_epoch fills date parameters
  // that were written without one.
  static std::unique_ptr<Session> replay(std::string_view log,
                                         const std::vector<std::string> &workbook_bytes,
                                         const std::string &default_epoch = "1970-01-01");

 private:
  struct State;
  std::unique_ptr<State> state_;
  mutable std::shared_mutex mu_;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_SESSION_H_
