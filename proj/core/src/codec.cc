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

#include "sheetgraph/codec.h"

#include <algorithm>

namespace sheetgraph {

namespace {

[[noreturn]] void bad(const std::string &field, const std::string &what) {
  throw Error(ErrorCode::kParameter, "field '" + field + "' " + what, field);
}

const Json &require(const Json &json, const char *name) {
  if (!json.is_object()) bad(name, "is inside a non-object");
  auto it = json.find(name);
  if (it == json.end() || it->is_null()) bad(name, "is missing");
  return *it;
}

const Json *optional_field(const Json &json, const char *name) {
  if (!json.is_object()) return nullptr;
  auto it = json.find(name);
  if (it == json.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string as_string(const Json &value, const char *name) {
  if (!value.is_string()) bad(name, "must be a string");
  return value.get<std::string>();
}

bool as_bool(const Json &value, const char *name) {
  if (!value.is_boolean()) bad(name, "must be a boolean");
  return value.get<bool>();
}

std::int64_t as_int(const Json &value, const char *name) {
  if (!value.is_number_integer()) bad(name, "must be an integer");
  return value.get<std::int64_t>();
}

std::uint32_t as_index(const Json &value, const char *name) {
  std::int64_t v = as_int(value, name);
  if (v < 0 || v > 0xFFFFFFFFLL) bad(name, "is out of range");
  return static_cast<std::uint32_t>(v);
}

std::string get_string(const Json &json, const char *name) { return as_string(require(json, name), name); }

std::string get_string(const Json &json, const char *name, std::string fallback) {
  const Json *v = optional_field(json, name);
  return v ? as_string(*v, name) : fallback;
}

bool get_bool(const Json &json, const char *name, bool fallback) {
  const Json *v = optional_field(json, name);
  return v ? as_bool(*v, name) : fallback;
}

Resource as_resource_json(const Json &value, const char *name) {
  std::string uri = as_string(value, name);
  try {
    return Resource(uri);
  } catch (const Error &) {
    bad(name, "is not an absolute URI");
  }
}

std::optional<Resource> get_resource(const Json &json, const char *name) {
  const Json *v = optional_field(json, name);
  if (!v) return std::nullopt;
  return as_resource_json(*v, name);
}

Json opt(const std::optional<Resource> &r) { return r ? Json(r->uri()) : Json(nullptr); }
Json opt(const std::optional<std::string> &s) { return s ? Json(*s) : Json(nullptr); }

Json encode_refs(const std::vector<CellRef> &refs) {
  Json out = Json::array();
  for (const auto &r : refs) out.push_back(encode(r));
  return out;
}

Json encode_misses(const std::vector<StagedMiss> &misses) {
  Json out = Json::array();
  for (const auto &m : misses) out.push_back({{"cell", encode(m.ref)}, {"reason", m.reason}});
  return out;
}

Json encode_literal(const Literal &lit) {
  return {{"value", lit.lexical()}, {"datatype", std::string(datatype_name(lit.datatype()))}};
}

Json encode_payload(const StatSummary &s) {
  Json rows = Json::array();
  for (const StatRow &row : s.rows) {
    Json occ = Json::array();
    for (const auto &o : row.occurrences) occ.push_back({{"cell", encode(o.ref)}, {"struck", o.struck}});
    rows.push_back({{"value", row.value},
                    {"count", row.count},
                    {"create", row.create},
                    {"preferred_label", row.preferred_label},
                    {"alt_labels", row.alt_labels},
                    {"comment", row.comment},
                    {"occurrences", occ}});
  }
  return {{"rows", rows}, {"misses", encode_misses(s.misses)}, {"skipped", encode_refs(s.skipped)}};
}

Json encode_payload(const RegexStaging &s) {
  Json matched = Json::array();
  for (const RegexMatch &m : s.matched) {
    matched.push_back({{"cell", encode(m.ref)},
                       {"extracted", m.extracted},
                       {"literal", m.literal ? encode_literal(*m.literal) : Json(nullptr)},
                       {"remainder", m.remainder},
                       {"struck", m.struck},
                       {"remainder_struck", m.remainder_struck}});
  }
  return {{"matched", matched}, {"missed", encode_misses(s.missed)}, {"skipped", encode_refs(s.skipped)}};
}

Json encode_payload(const DateStaging &s) {
  Json hits = Json::array();
  for (const DateHit &h : s.hits) {
    hits.push_back({{"cell", encode(h.ref)},
                    {"date", h.iso_date},
                    {"source", h.pattern ? "pattern" : "serial"},
                    {"pattern", h.pattern ? Json(*h.pattern) : Json(nullptr)},
                    {"struck", h.struck}});
  }
  return {{"hits", hits}, {"outliers", encode_misses(s.outliers)}};
}

Json encode_payload(const PersonIndex &index) {
  Json records = Json::array();
  for (const PersonRecord &r : index.records) {
    Json mentions = Json::array();
    for (const auto &m : r.mentions) {
      mentions.push_back({{"cell", encode(m.ref)},
                          {"surface", m.surface},
                          {"struck", m.struck},
                          {"comment", m.comment}});
    }
    records.push_back({{"id", r.id},
                       {"first_name", opt(r.first_name)},
                       {"last_name", r.last_name},
                       {"label", r.label()},
                       {"needs_review", r.needs_review},
                       {"mentions", mentions}});
  }
  return {{"records", records}};
}

Json encode_payload(const RelationshipStaging &s) {
  Json pairs = Json::array();
  for (const auto &p : s.pairs) pairs.push_back({{"a", encode(p.a)}, {"b", encode(p.b)}, {"struck", p.struck}});
  return {{"group_a", encode_refs(s.group_a)},
          {"group_b", encode_refs(s.group_b)},
          {"pairs", pairs},
          {"warnings", encode_misses(s.warnings)},
          {"comparisons", s.comparisons}};
}

}  // namespace

Json encode(const CellRef &ref) {
  return {{"workbook", ref.workbook_id}, {"sheet", ref.sheet}, {"row", ref.row}, {"column", ref.column}};
}

CellRef decode_cell_ref(const Json &json) {
  CellRef ref;
  ref.workbook_id = get_string(json, "workbook");
  ref.sheet = get_string(json, "sheet");
  ref.row = as_index(require(json, "row"), "row");
  ref.column = as_index(require(json, "column"), "column");
  return ref;
}

Json encode(const Selection &selection) { return encode_refs(selection.cells); }

Selection decode_selection(const Json &json) {
  if (!json.is_array()) bad("selection", "must be an array of cells");
  Selection selection;
  for (const Json &item : json) selection.cells.push_back(decode_cell_ref(item));
  return selection;
}

Json encode(const Term &term) {
  if (const Resource *r = as_resource(term)) return {{"type", "uri"}, {"value", r->uri()}};
  Json out = encode_literal(std::get<Literal>(term));
  out["type"] = "literal";
  return out;
}

Term decode_term(const Json &json) {
  std::string type = get_string(json, "type");
  if (type == "uri") return as_resource_json(require(json, "value"), "value");
  if (type != "literal") bad("type", "must be 'uri' or 'literal'");
  auto datatype = datatype_from_name(get_string(json, "datatype", "string"));
  if (!datatype) bad("datatype", "is not a supported datatype");
  try {
    return Literal(get_string(json, "value"), *datatype);
  } catch (const Error &) {
    bad("value", "is not valid for its datatype");
  }
}

Json encode(const Cell &cell) {
  Json out = {{"row", cell.ref.row},
              {"column", cell.ref.column},
              {"kind", std::string(kind_name(cell.kind()))}};
  std::visit(
      [&](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TextValue>) {
          out["value"] = v.text;
        } else if constexpr (std::is_same_v<T, NumberValue>) {
          out["value"] = v.number;
        } else if constexpr (std::is_same_v<T, DateSerialValue>) {
          out["value"] = v.days;
        } else if constexpr (std::is_same_v<T, FormulaValue>) {
          out["value"] = v.source;
        } else {
          out["value"] = nullptr;
        }
      },
      cell.value);
  if (cell.is_text()) {
    Json runs = Json::array();
    for (const auto &run : cell.runs) runs.push_back({{"text", run.text}, {"struck", run.struck}});
    out["runs"] = runs;
  }
  return out;
}

Json encode(const ExtractorParams &params) {
  return std::visit(
      [](const auto &p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, StatsParams>) {
          return {{"kind", "stats"},
                  {"transform", opt(p.transform)},
                  {"include_struck", p.include_struck},
                  {"property", p.property.uri()},
                  {"type_or_subclass", opt(p.type_or_subclass)},
                  {"as_subclass", p.as_subclass}};
        } else if constexpr (std::is_same_v<T, RegexParams>) {
          return {{"kind", "regex"},
                  {"pattern", p.pattern},
                  {"mode", std::string(regex_mode_name(p.mode))},
                  {"group", p.group},
                  {"datatype", std::string(datatype_name(p.datatype))},
                  {"constant", opt(p.constant)},
                  {"property", opt(p.property)},
                  {"remainder_property", opt(p.remainder_property)}};
        } else if constexpr (std::is_same_v<T, DateParams>) {
          Json patterns = Json::array();
          for (const auto &dp : p.patterns) patterns.push_back({{"regex", dp.regex}, {"roles", dp.roles}});
          return {{"kind", "date"}, {"property", p.property.uri()}, {"patterns", patterns}, {"epoch", p.epoch}};
        } else if constexpr (std::is_same_v<T, PersonParams>) {
          return {{"kind", "person"}};
        } else {
          return {{"kind", "relationship"},
                  {"regex_a", p.regex_a},
                  {"regex_b", p.regex_b},
                  {"condition", std::string(join_condition_name(p.condition))},
                  {"group_a", p.group_a},
                  {"group_b", p.group_b}};
        }
      },
      params);
}

ExtractorParams decode_params(const Json &json, const std::string &default_epoch) {
  StagingKind kind = parse_staging_kind(get_string(json, "kind"));
  switch (kind) {
    case StagingKind::kStats: {
      StatsParams p;
      if (const Json *t = optional_field(json, "transform")) p.transform = as_string(*t, "transform");
      p.include_struck = get_bool(json, "include_struck", true);
      if (auto r = get_resource(json, "property")) p.property = *r;
      p.type_or_subclass = get_resource(json, "type_or_subclass");
      p.as_subclass = get_bool(json, "as_subclass", false);
      return p;
    }
    case StagingKind::kRegex: {
      RegexParams p;
      p.pattern = get_string(json, "pattern");
      p.mode = parse_regex_mode(get_string(json, "mode", "literal"));
      if (const Json *g = optional_field(json, "group")) p.group = static_cast<int>(as_int(*g, "group"));
      auto datatype = datatype_from_name(get_string(json, "datatype", "string"));
      if (!datatype) bad("datatype", "is not a supported datatype");
      p.datatype = *datatype;
      p.constant = get_resource(json, "constant");
      p.property = get_resource(json, "property");
      p.remainder_property = get_resource(json, "remainder_property");
      return p;
    }
    case StagingKind::kDate: {
      DateParams p;
      p.property = as_resource_json(require(json, "property"), "property");
      if (const Json *list = optional_field(json, "patterns")) {
        if (!list->is_array()) bad("patterns", "must be an array");
        for (const Json &item : *list) {
          p.patterns.push_back({get_string(item, "regex"), get_string(item, "roles", "YMD")});
        }
      }
      p.epoch = get_string(json, "epoch", default_epoch);
      return p;
    }
    case StagingKind::kPerson:
      return PersonParams{};
    case StagingKind::kRelationship: {
      RelationshipParams p;
      p.regex_a = get_string(json, "regex_a");
      p.regex_b = get_string(json, "regex_b");
      p.condition = parse_join_condition(get_string(json, "condition", "prefix"));
      if (const Json *g = optional_field(json, "group_a")) p.group_a = static_cast<int>(as_int(*g, "group_a"));
      if (const Json *g = optional_field(json, "group_b")) p.group_b = static_cast<int>(as_int(*g, "group_b"));
      return p;
    }
  }
  bad("kind", "is unknown");
}

Json encode(const StagingRequest &request) {
  return {{"selection", encode(request.selection)}, {"params", encode(request.params)}};
}

StagingRequest decode_request(const Json &json, const std::string &default_epoch) {
  return {decode_selection(require(json, "selection")),
          decode_params(require(json, "params"), default_epoch)};
}

Json encode(const StagingPayload &payload) {
  return std::visit([](const auto &p) { return encode_payload(p); }, payload);
}

Json encode(const StagedResult &staged) {
  return {{"staging_id", staged.staging_id},
          {"kind", std::string(staging_kind_name(staged.kind))},
          {"request", encode(staged.request)},
          {"payload", encode(staged.payload)},
          {"created_at", staged.created_at},
          {"commit_id", opt(staged.commit_id)}};
}

Json encode(const Adjustment &adjustment) {
  if (const auto *edit = std::get_if<PersonEdit>(&adjustment)) {
    Json out = {{"edit", std::string(person_edit_name(edit->kind))}, {"person", edit->person}};
    if (!edit->other.empty()) out["other"] = edit->other;
    if (edit->ref) out["cell"] = encode(*edit->ref);
    if (!edit->surface.empty()) out["surface"] = edit->surface;
    return out;
  }
  const auto &stats = std::get<StatsAdjustment>(adjustment);
  Json rows = Json::array();
  for (const StatsRowEdit &e : stats.rows) {
    Json row = {{"row", e.row}};
    if (e.create) row["create"] = *e.create;
    if (e.preferred_label) row["preferred_label"] = *e.preferred_label;
    if (e.alt_labels) row["alt_labels"] = *e.alt_labels;
    if (e.comment) row["comment"] = *e.comment;
    rows.push_back(row);
  }
  Json out = {{"rows", rows}};
  if (stats.property) out["property"] = stats.property->uri();
  if (stats.type_or_subclass) out["type_or_subclass"] = stats.type_or_subclass->uri();
  if (stats.as_subclass) out["as_subclass"] = *stats.as_subclass;
  return out;
}

Adjustment decode_adjustment(StagingKind kind, const Json &json) {
  if (kind == StagingKind::kPerson) {
    PersonEdit edit;
    edit.kind = parse_person_edit(get_string(json, "edit"));
    edit.person = get_string(json, "person");
    edit.other = get_string(json, "other", "");
    if (const Json *cell = optional_field(json, "cell")) edit.ref = decode_cell_ref(*cell);
    edit.surface = get_string(json, "surface", "");
    return edit;
  }
  if (kind != StagingKind::kStats) {
    throw Error(ErrorCode::kEdit,
                std::string(staging_kind_name(kind)) + " stagings accept no edits; run again with new parameters",
                "kind");
  }
  StatsAdjustment adj;
  if (const Json *rows = optional_field(json, "rows")) {
    if (!rows->is_array()) bad("rows", "must be an array");
    for (const Json &row : *rows) {
      StatsRowEdit e;
      e.row = as_index(require(row, "row"), "row");
      if (const Json *v = optional_field(row, "create")) e.create = as_bool(*v, "create");
      if (const Json *v = optional_field(row, "preferred_label")) {
        e.preferred_label = as_string(*v, "preferred_label");
      }
      if (const Json *v = optional_field(row, "alt_labels")) {
        if (!v->is_array()) bad("alt_labels", "must be an array");
        std::vector<std::string> labels;
        for (const Json &l : *v) labels.push_back(as_string(l, "alt_labels"));
        e.alt_labels = labels;
      }
      if (const Json *v = optional_field(row, "comment")) e.comment = as_string(*v, "comment");
      adj.rows.push_back(std::move(e));
    }
  }
  adj.property = get_resource(json, "property");
  adj.type_or_subclass = get_resource(json, "type_or_subclass");
  if (const Json *v = optional_field(json, "as_subclass")) adj.as_subclass = as_bool(*v, "as_subclass");
  return adj;
}

std::vector<std::string> ntriples_lines(const std::vector<Triple> &triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const Triple &t : triples) lines.push_back(ntriples_line(t));
  std::sort(lines.begin(), lines.end());
  return lines;
}

Json encode(const CommitRecord &record) {
  return {{"commit_id", record.commit_id},
          {"staging_id", record.staging_id},
          {"kind", record.kind},
          {"timestamp", record.timestamp},
          {"matching", ntriples_lines(record.matching_added)},
          {"knowledge", ntriples_lines(record.knowledge_added)}};
}

Json encode(const CollectorConfig &config) {
  Json required = Json::array();
  for (const auto &r : config.required_properties) required.push_back(r.uri());
  return {{"workbook", config.workbook_id},
          {"sheet", config.sheet},
          {"first_row", config.first_row},
          {"last_row", config.last_row ? Json(*config.last_row) : Json(nullptr)},
          {"default_type", config.default_type.uri()},
          {"required_properties", required},
          {"instance_id_property", opt(config.instance_id_property)}};
}

CollectorConfig decode_collector_config(const Json &json) {
  CollectorConfig config;
  config.workbook_id = get_string(json, "workbook");
  config.sheet = get_string(json, "sheet");
  if (const Json *v = optional_field(json, "first_row")) config.first_row = as_index(*v, "first_row");
  if (const Json *v = optional_field(json, "last_row")) config.last_row = as_index(*v, "last_row");
  config.default_type = as_resource_json(require(json, "default_type"), "default_type");
  if (const Json *list = optional_field(json, "required_properties")) {
    if (!list->is_array()) bad("required_properties", "must be an array");
    for (const Json &item : *list) {
      config.required_properties.push_back(as_resource_json(item, "required_properties"));
    }
  }
  config.instance_id_property = get_resource(json, "instance_id_property");
  return config;
}

Json encode(const InstanceReport &report) {
  Json instances = Json::array();
  for (const auto &i : report.instances) {
    Json types = Json::array();
    for (const auto &t : i.types) types.push_back(t.uri());
    instances.push_back({{"instance", i.instance.uri()},
                         {"row", i.row},
                         {"types", types},
                         {"property_count", i.property_count}});
  }
  Json skipped = Json::array();
  for (const auto &s : report.skipped) skipped.push_back({{"row", s.row}, {"reason", s.reason}});
  return {{"workbook", report.workbook_id},
          {"sheet", report.sheet},
          {"instances", instances},
          {"skipped_rows", skipped}};
}

Json encode(const LiftReport &report) {
  Json skipped = Json::array();
  for (const auto &s : report.skipped) {
    skipped.push_back({{"a", encode(s.a)}, {"b", encode(s.b)}, {"reason", s.reason}});
  }
  return {{"added", report.added}, {"skipped", skipped}};
}

Json encode(const Error &error) {
  Json out = {{"code", std::string(error.token())}, {"message", error.what()}};
  out["parameter"] = error.parameter().empty() ? Json(nullptr) : Json(error.parameter());
  if (const auto *pe = dynamic_cast<const ParseError *>(&error)) {
    if (pe->offset()) out["offset"] = *pe->offset();
    if (pe->line()) out["line"] = *pe->line();
  }
  return out;
}

}  // namespace sheetgraph
