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

#include "sheetgraph/session.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <mutex>
#include <set>

#include "session_state.h"
#include "sheetgraph/codec.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace {

std::string now_iso() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Resource cell_uri(const Corpus &corpus, const CellRef &ref) {
  return Resource(corpus.deep_link(ref).uri);
}

void materialize_stats(const Corpus &corpus, const Minter &minter, const StatSummary &s,
                       Materialized &out) {
  std::string kind = s.params.type_or_subclass ? local_name(s.params.type_or_subclass->uri()) : "Resource";
  for (const StatRow &row : s.rows) {
    if (!row.create || row.occurrences.empty()) continue;
    Resource r = minter.mint_resource(kind, row.preferred_label);
    out.knowledge.push_back({r, vocab::rdfs_label(), Literal::string(trim(row.preferred_label))});
    for (const auto &alt : row.alt_labels) {
      if (!trim(alt).empty()) out.knowledge.push_back({r, vocab::alt_label(), Literal::string(trim(alt))});
    }
    if (!trim(row.comment).empty()) {
      out.knowledge.push_back({r, vocab::rdfs_comment(), Literal::string(trim(row.comment))});
    }
    if (s.params.type_or_subclass) {
      const Resource &p = s.params.as_subclass ? vocab::rdfs_subclass_of() : vocab::rdf_type();
      out.knowledge.push_back({r, p, *s.params.type_or_subclass});
    }
    for (const Occurrence &o : row.occurrences) {
      out.matching.push_back({cell_uri(corpus, o.ref), vocab::route(s.params.property, o.struck), r});
    }
  }
}

void materialize_regex(const Corpus &corpus, const RegexStaging &s, Materialized &out) {
  Resource property = s.params.effective_property();
  for (const RegexMatch &m : s.matched) {
    Resource subject = cell_uri(corpus, m.ref);
    Term object = s.params.mode == RegexMode::kLiteral ? Term(*m.literal) : Term(*s.params.constant);
    out.matching.push_back({subject, vocab::route(property, m.struck), object});
    if (s.params.remainder_property && !m.remainder.empty()) {
      out.matching.push_back({subject, vocab::route(*s.params.remainder_property, m.remainder_struck),
                              Literal::string(m.remainder)});
    }
  }
}

void materialize_dates(const Corpus &corpus, const DateStaging &s, Materialized &out) {
  for (const DateHit &h : s.hits) {
    out.matching.push_back({cell_uri(corpus, h.ref), vocab::route(s.params.property, h.struck),
                            Literal(h.iso_date, Datatype::kDate)});
  }
}

void materialize_persons(const Corpus &corpus, const Minter &minter, const PersonIndex &index,
                         Materialized &out) {
  for (const PersonRecord &record : index.records) {
    if (record.mentions.empty()) continue;
    Resource person = minter.mint_resource("Person", record.label());
    out.knowledge.push_back({person, vocab::rdf_type(), vocab::person_class()});
    out.knowledge.push_back({person, vocab::rdfs_label(), Literal::string(record.label())});
    if (record.first_name) {
      out.knowledge.push_back({person, vocab::first_name(), Literal::string(*record.first_name)});
    }
    out.knowledge.push_back({person, vocab::last_name(), Literal::string(record.last_name)});
    for (const PersonMention &m : record.mentions) {
      Resource subject = cell_uri(corpus, m.ref);
      out.matching.push_back({subject, vocab::route(vocab::mentions_person(), m.struck), person});
      if (!m.comment.empty()) {
        out.matching.push_back(
            {subject, vocab::route(vocab::remainder_comment(), m.struck), Literal::string(m.comment)});
      }
    }
  }
}

void materialize_relationships(const Corpus &corpus, const RelationshipStaging &s, Materialized &out) {
  for (const RelationshipPair &p : s.pairs) {
    out.matching.push_back({cell_uri(corpus, p.a), vocab::route(vocab::related_cell(), p.struck),
                            cell_uri(corpus, p.b)});
  }
}

StagingPayload execute(const Corpus &corpus, const StagingRequest &request) {
  return std::visit(
      [&](const auto &p) -> StagingPayload {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StatsParams>) {
          return descriptive_statistics(corpus, request.selection, p);
        } else if constexpr (std::is_same_v<T, RegexParams>) {
          return regex_extract(corpus, request.selection, p);
        } else if constexpr (std::is_same_v<T, DateParams>) {
          return date_extract(corpus, request.selection, p);
        } else if constexpr (std::is_same_v<T, PersonParams>) {
          return person_extract(corpus, request.selection);
        } else {
          return relationship_discover(corpus, request.selection, p);
        }
      },
      request.params);
}

void apply_stats_adjustment(StatSummary &summary, const StatsAdjustment &adj) {
  for (const StatsRowEdit &e : adj.rows) {
    if (e.row >= summary.rows.size()) {
      throw Error(ErrorCode::kEdit, "no statistics row " + std::to_string(e.row), "row");
    }
    if (e.preferred_label && trim(*e.preferred_label).empty()) {
      throw Error(ErrorCode::kEdit, "preferred label must not be blank", "preferred_label");
    }
  }
  for (const StatsRowEdit &e : adj.rows) {
    StatRow &row = summary.rows[e.row];
    if (e.create) row.create = *e.create;
    if (e.preferred_label) row.preferred_label = *e.preferred_label;
    if (e.alt_labels) row.alt_labels = *e.alt_labels;
    if (e.comment) row.comment = *e.comment;
  }
  if (adj.property) summary.params.property = *adj.property;
  if (adj.type_or_subclass) summary.params.type_or_subclass = *adj.type_or_subclass;
  if (adj.as_subclass) summary.params.as_subclass = *adj.as_subclass;
}

}  // namespace

std::string_view staging_kind_name(StagingKind kind) {
  switch (kind) {
    case StagingKind::kStats: return "stats";
    case StagingKind::kRegex: return "regex";
    case StagingKind::kDate: return "date";
    case StagingKind::kPerson: return "person";
    case StagingKind::kRelationship: return "relationship";
  }
  return "";
}

StagingKind parse_staging_kind(std::string_view name) {
  for (auto k : {StagingKind::kStats, StagingKind::kRegex, StagingKind::kDate, StagingKind::kPerson,
                 StagingKind::kRelationship}) {
    if (staging_kind_name(k) == name) return k;
  }
  throw Error(ErrorCode::kParameter, "unknown extractor kind '" + std::string(name) + "'", "kind");
}

StagingKind kind_of(const ExtractorParams &params) { return static_cast<StagingKind>(params.index()); }

Materialized materialize(const Corpus &corpus, const Minter &minter, const StagedResult &staged) {
  Materialized out;
  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StatSummary>) {
          materialize_stats(corpus, minter, p, out);
        } else if constexpr (std::is_same_v<T, RegexStaging>) {
          materialize_regex(corpus, p, out);
        } else if constexpr (std::is_same_v<T, DateStaging>) {
          materialize_dates(corpus, p, out);
        } else if constexpr (std::is_same_v<T, PersonIndex>) {
          materialize_persons(corpus, minter, p, out);
        } else {
          materialize_relationships(corpus, p, out);
        }
      },
      staged.payload);
  return out;
}

// ---------------------------------------------------------------------------

Session::State::State(std::string base) : corpus(std::move(base)), minter(corpus.base_uri()) {}

void Session::State::append(Json entry) {
  Json line = {{"v", kLogVersion}};
  line.update(entry);
  log.push_back(line.dump());
}

StagedResult &Session::State::find_staging(const std::string &id) {
  auto it = stagings.find(id);
  if (it == stagings.end()) {
    throw Error(ErrorCode::kStagingNotFound, "no staging '" + id + "'", "staging_id");
  }
  return it->second;
}

CommitRecord Session::State::apply(std::string staging_id, std::string kind,
                                   const std::vector<Triple> &matching,
                                   const std::vector<Triple> &knowledge) {
  CommitRecord record;
  record.commit_id = "c" + std::to_string(next_commit++);
  record.staging_id = std::move(staging_id);
  record.kind = std::move(kind);
  record.timestamp = now_iso();
  for (const Triple &t : matching) {
    if (dataset.matching.add(t)) record.matching_added.push_back(t);
  }
  for (const Triple &t : knowledge) {
    if (dataset.knowledge.add(t)) record.knowledge_added.push_back(t);
  }
  commits.emplace(record.commit_id, record);
  commit_order.push_back(record.commit_id);
  return record;
}

CommitRecord Session::State::revert(const std::string &commit_id) {
  auto it = commits.find(commit_id);
  if (it == commits.end()) {
    throw Error(ErrorCode::kCommitNotFound, "no active commit '" + commit_id + "'", "commit_id");
  }
  CommitRecord record = it->second;
  for (const Triple &t : record.matching_added) dataset.matching.remove(t);
  for (const Triple &t : record.knowledge_added) dataset.knowledge.remove(t);
  commits.erase(it);
  std::erase(commit_order, commit_id);
  if (!record.staging_id.empty()) {
    auto st = stagings.find(record.staging_id);
    if (st != stagings.end()) st->second.commit_id.reset();
  }
  std::erase_if(collections, [&](const Collection &c) { return c.commit_id == commit_id; });
  return record;
}

InstanceMap Session::State::all_instances() const {
  InstanceMap all;
  for (const Collection &c : collections) all.insert(c.instances.begin(), c.instances.end());
  return all;
}

Session::Session(std::string base_uri) : state_(std::make_unique<State>(std::move(base_uri))) {
  state_->append({{"op", "open_project"}, {"base_uri", state_->corpus.base_uri()}});
}

Session::~Session() = default;

const std::string &Session::base_uri() const { return state_->corpus.base_uri(); }

std::string Session::load_workbook(std::string_view bytes, WorkbookFormat format) {
  Workbook wb = ::sheetgraph::load_workbook(bytes, format);
  std::unique_lock lock(mu_);
  bool fresh = state_->corpus.find_workbook(wb.id()) == nullptr;
  std::string id = wb.id();
  std::string checksum = wb.checksum();
  state_->corpus.add(std::move(wb));
  if (fresh) {
    state_->append({{"op", "load_workbook"},
                    {"format", std::string(format_tag(format))},
                    {"checksum", checksum},
                    {"workbook_id", id}});
  }
  return id;
}

std::shared_ptr<const Workbook> Session::workbook(std::string_view id) const {
  std::shared_lock lock(mu_);
  for (auto &wb : state_->corpus.workbooks()) {
    if (wb->id() == id) return wb;
  }
  throw Error(ErrorCode::kLookup, "unknown workbook '" + std::string(id) + "'", "workbook");
}

std::vector<std::shared_ptr<const Workbook>> Session::workbooks() const {
  std::shared_lock lock(mu_);
  return state_->corpus.workbooks();
}

DeepLinkUri Session::deep_link(const CellRef &ref) const {
  std::shared_lock lock(mu_);
  return state_->corpus.deep_link(ref);
}

StagedResult Session::run(const StagingRequest &request) {
  std::unique_lock lock(mu_);
  StagedResult staged;
  staged.kind = kind_of(request.params);
  staged.request = request;
  staged.payload = execute(state_->corpus, request);
  staged.created_at = now_iso();
  staged.staging_id = "s" + std::to_string(state_->next_staging++);
  state_->stagings.emplace(staged.staging_id, staged);
  state_->append({{"op", "run"},
                  {"staging_id", staged.staging_id},
                  {"kind", std::string(staging_kind_name(staged.kind))},
                  {"request", encode(request)}});
  return staged;
}

StagedResult Session::staging(const std::string &staging_id) const {
  std::shared_lock lock(mu_);
  return state_->find_staging(staging_id);
}

std::vector<std::string> Session::staging_ids() const {
  std::shared_lock lock(mu_);
  std::vector<std::pair<std::size_t, std::string>> ids;
  for (const auto &[id, _] : state_->stagings) ids.emplace_back(std::stoul(id.substr(1)), id);
  std::sort(ids.begin(), ids.end());
  std::vector<std::string> out;
  for (auto &p : ids) out.push_back(p.second);
  return out;
}

StagedResult Session::adjust(const std::string &staging_id, const Adjustment &adjustment) {
  std::unique_lock lock(mu_);
  StagedResult &staged = state_->find_staging(staging_id);
  if (staged.commit_id) {
    throw Error(ErrorCode::kEdit, "staging " + staging_id + " is already committed", "staging_id");
  }
  StagingPayload updated = staged.payload;
  if (const auto *adj = std::get_if<StatsAdjustment>(&adjustment)) {
    auto *summary = std::get_if<StatSummary>(&updated);
    if (!summary) throw Error(ErrorCode::kEdit, "statistics edit on a non-statistics staging", "kind");
    apply_stats_adjustment(*summary, *adj);
  } else {
    auto *index = std::get_if<PersonIndex>(&updated);
    if (!index) throw Error(ErrorCode::kEdit, "person edit on a non-person staging", "kind");
    apply_person_edit(state_->corpus, *index, std::get<PersonEdit>(adjustment));
  }
  staged.payload = std::move(updated);
  state_->append({{"op", "adjust"}, {"staging_id", staging_id}, {"adjustment", encode(adjustment)}});
  return staged;
}

void Session::discard(const std::string &staging_id) {
  std::unique_lock lock(mu_);
  state_->find_staging(staging_id);
  state_->stagings.erase(staging_id);
  state_->append({{"op", "discard"}, {"staging_id", staging_id}});
}

CommitRecord Session::commit(const std::string &staging_id) {
  std::unique_lock lock(mu_);
  StagedResult &staged = state_->find_staging(staging_id);
  if (staged.commit_id) return state_->commits.at(*staged.commit_id);
  Materialized m = materialize(state_->corpus, state_->minter, staged);
  CommitRecord record = state_->apply(staging_id, std::string(staging_kind_name(staged.kind)),
                                      m.matching, m.knowledge);
  staged.commit_id = record.commit_id;
  Json entry = encode(record);
  entry.erase("timestamp");
  entry.erase("kind");
  entry["op"] = "commit";
  state_->append(entry);
  return record;
}

CommitRecord Session::commit_record(const std::string &commit_id) const {
  std::shared_lock lock(mu_);
  auto it = state_->commits.find(commit_id);
  if (it == state_->commits.end()) {
    throw Error(ErrorCode::kCommitNotFound, "no active commit '" + commit_id + "'", "commit_id");
  }
  return it->second;
}

std::vector<CommitRecord> Session::commits() const {
  std::shared_lock lock(mu_);
  std::vector<CommitRecord> out;
  for (const auto &id : state_->commit_order) out.push_back(state_->commits.at(id));
  return out;
}

CommitRecord Session::undo(const std::string &commit_id) {
  std::unique_lock lock(mu_);
  CommitRecord record = state_->revert(commit_id);
  state_->append({{"op", "undo"}, {"commit_id", commit_id}});
  return record;
}

Graph Session::inspect_graph(const Selection &selection) const {
  std::shared_lock lock(mu_);
  Graph out;
  std::set<Resource> referenced;
  for (const CellRef &ref : selection.cells) {
    Resource subject = cell_uri(state_->corpus, ref);
    for (const Triple &t : state_->dataset.matching.query({subject, std::nullopt, std::nullopt})) {
      out.add(t);
      if (const Resource *r = as_resource(t.object)) referenced.insert(*r);
    }
  }
  for (const Resource &r : referenced) {
    for (const Triple &t : state_->dataset.knowledge.query({r, std::nullopt, std::nullopt})) out.add(t);
  }
  return out;
}

std::string Session::inspect(const Selection &selection, RdfFormat format) const {
  return serialize(inspect_graph(selection), format);
}

std::size_t Session::remove_annotations(const Selection &selection,
                                        const std::optional<Resource> &predicate) {
  std::unique_lock lock(mu_);
  std::vector<Triple> doomed;
  for (const CellRef &ref : selection.cells) {
    auto found = state_->dataset.matching.query({cell_uri(state_->corpus, ref), predicate, std::nullopt});
    doomed.insert(doomed.end(), found.begin(), found.end());
  }
  std::size_t removed = 0;
  for (const Triple &t : doomed) removed += state_->dataset.matching.remove(t) ? 1 : 0;
  state_->append({{"op", "remove_annotations"},
                  {"selection", encode(selection)},
                  {"predicate", predicate ? Json(predicate->uri()) : Json(nullptr)},
                  {"removed", removed}});
  return removed;
}

std::vector<Resource> Session::orphans() const {
  std::shared_lock lock(mu_);
  const std::string prefix = state_->corpus.base_uri() + "resource/";
  std::set<Resource> subjects;
  for (const Triple &t : state_->dataset.knowledge.triples()) {
    if (t.subject.uri().rfind(prefix, 0) == 0) subjects.insert(t.subject);
  }
  std::vector<Resource> out;
  for (const Resource &r : subjects) {
    if (state_->dataset.matching.count({std::nullopt, std::nullopt, Term(r)}) == 0) out.push_back(r);
  }
  return out;
}

CollectOutcome Session::collect(const CollectorConfig &config, bool rerun) {
  std::unique_lock lock(mu_);
  CollectionResult result = collect_instances(state_->corpus, state_->dataset, config);

  std::vector<std::string> overlapping;
  for (const auto &c : state_->collections) {
    bool overlap = std::any_of(result.instances.begin(), result.instances.end(),
                               [&](const auto &kv) { return c.instances.count(kv.first) != 0; });
    if (overlap) overlapping.push_back(c.commit_id);
  }
  if (!overlapping.empty() && !rerun) {
    throw Error(ErrorCode::kCollectionOverlap,
                "rows of " + config.sheet + " were already collected by " + overlapping.front() +
                    "; set the re-run flag to replace them",
                "rerun");
  }
  if (!overlapping.empty()) {
    for (const auto &id : overlapping) state_->revert(id);
    result = collect_instances(state_->corpus, state_->dataset, config);
  }

  CommitRecord record = state_->apply("", "collect", {}, result.knowledge);
  state_->collections.push_back({record.commit_id, result.instances});
  state_->last_report = result.report;
  state_->append({{"op", "collect"},
                  {"config", encode(config)},
                  {"rerun", rerun},
                  {"commit_id", record.commit_id},
                  {"knowledge", ntriples_lines(record.knowledge_added)}});
  return {result.report, record.commit_id};
}

LiftOutcome Session::lift(const Resource &predicate) {
  std::unique_lock lock(mu_);
  LiftResult result =
      lift_relationships(state_->corpus, state_->dataset.matching, state_->all_instances(), predicate);
  CommitRecord record = state_->apply("", "lift", {}, result.knowledge);
  result.report.added = record.knowledge_added.size();
  state_->append({{"op", "lift"},
                  {"predicate", predicate.uri()},
                  {"commit_id", record.commit_id},
                  {"knowledge", ntriples_lines(record.knowledge_added)}});
  return {result.report, record.commit_id};
}

std::optional<InstanceReport> Session::last_instance_report() const {
  std::shared_lock lock(mu_);
  return state_->last_report;
}

Dataset Session::dataset() const {
  std::shared_lock lock(mu_);
  return state_->dataset;
}

std::size_t Session::size(GraphName graph) const {
  std::shared_lock lock(mu_);
  return state_->dataset[graph].size();
}

std::size_t Session::count(GraphName graph, const Pattern &pattern) const {
  std::shared_lock lock(mu_);
  return state_->dataset[graph].count(pattern);
}

std::string Session::export_graph(GraphName graph, RdfFormat format) const {
  std::shared_lock lock(mu_);
  return serialize(state_->dataset[graph], format);
}

std::string Session::log_text() const {
  std::shared_lock lock(mu_);
  std::string out;
  for (const auto &line : state_->log) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace sheetgraph
