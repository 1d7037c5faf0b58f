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

#include "sheetgraph/collector.h"

#include <algorithm>
#include <set>

#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace {

using Annotation = std::pair<Resource, Term>;

bool is_relationship(const Resource &p) {
  return p == vocab::related_cell() || p == vocab::related_cell_struck();
}

std::string id_text(const Dataset &dataset, const Term &object) {
  if (const Literal *lit = as_literal(object)) return lit->lexical();
  const Resource &r = std::get<Resource>(object);
  auto labels = dataset.knowledge.query({r, vocab::rdfs_label(), std::nullopt});
  if (!labels.empty()) {
    if (const Literal *lit = as_literal(labels.front().object)) return lit->lexical();
  }
  return percent_decode(local_name(r.uri())).value_or(local_name(r.uri()));
}

}  // namespace

CollectionResult collect_instances(const Corpus &corpus, const Dataset &dataset,
                                   const CollectorConfig &config) {
  const Sheet &sheet = corpus.workbook(config.workbook_id).sheet(config.sheet);
  CollectionResult result;
  result.report.workbook_id = config.workbook_id;
  result.report.sheet = config.sheet;
  if (sheet.size() == 0) return result;
  std::uint32_t last = config.last_row.value_or(sheet.row_count() - 1);

  std::map<std::uint32_t, std::set<Annotation>> rows;
  auto it = sheet.cells().lower_bound(CellPos{config.first_row, 0});
  for (; it != sheet.cells().end() && it->first.row <= last; ++it) {
    Resource subject(corpus.deep_link(it->second.ref).uri);
    for (const Triple &t : dataset.matching.query({subject, std::nullopt, std::nullopt})) {
      if (!is_relationship(t.predicate)) rows[it->first.row].emplace(t.predicate, t.object);
    }
  }

  const std::string prefix = corpus.base_uri() + "instance/" + percent_encode(config.workbook_id) +
                             "/" + percent_encode(config.sheet) + "/R";
  for (const auto &[row, annotations] : rows) {
    if (annotations.empty()) continue;
    std::string missing;
    for (const Resource &required : config.required_properties) {
      bool present = std::any_of(annotations.begin(), annotations.end(),
                                 [&](const Annotation &a) { return a.first == required; });
      if (!present) {
        missing = required.uri();
        break;
      }
    }
    if (!missing.empty()) {
      result.report.skipped.push_back({row, "missing required property " + missing});
      continue;
    }

    std::optional<std::string> id;
    if (config.instance_id_property) {
      for (const auto &[p, o] : annotations) {
        if (p == *config.instance_id_property) {
          id = id_text(dataset, o);
          break;
        }
      }
    }
    std::string uri = prefix + std::to_string(row);
    if (id && !trim(*id).empty()) uri += "-" + slug(*id);
    Resource instance(uri);

    InstanceEntry entry{instance, row, {}, annotations.size()};
    for (const auto &[p, o] : annotations) {
      if (p == vocab::type_hint()) {
        if (const Resource *type = as_resource(o)) entry.types.push_back(*type);
        result.knowledge.push_back({instance, vocab::rdf_type(), o});
      } else if (p == vocab::remainder_comment()) {
        result.knowledge.push_back({instance, vocab::rdfs_comment(), o});
      } else {
        result.knowledge.push_back({instance, p, o});
      }
    }
    if (entry.types.empty()) {
      entry.types.push_back(config.default_type);
      result.knowledge.push_back({instance, vocab::rdf_type(), config.default_type});
    }
    if (id && !trim(*id).empty()) {
      result.knowledge.push_back({instance, vocab::rdfs_label(), Literal::string(trim(*id))});
    }
    result.instances.emplace(RowKey{config.workbook_id, config.sheet, row}, instance);
    result.report.instances.push_back(std::move(entry));
  }
  return result;
}

LiftResult lift_relationships(const Corpus &corpus, const Graph &matching,
                              const InstanceMap &instances, const Resource &predicate) {
  LiftResult result;
  std::set<Triple> seen;
  for (bool struck : {false, true}) {
    Resource relation = struck ? vocab::related_cell_struck() : vocab::related_cell();
    for (const Triple &t : matching.query({std::nullopt, relation, std::nullopt})) {
      const Resource *object = as_resource(t.object);
      if (!object) continue;
      CellRef a = corpus.resolve_deep_link(t.subject.uri());
      CellRef b = corpus.resolve_deep_link(object->uri());
      auto ia = instances.find({a.workbook_id, a.sheet, a.row});
      auto ib = instances.find({b.workbook_id, b.sheet, b.row});
      if (ia == instances.end() || ib == instances.end()) {
        const CellRef &lonely = ia == instances.end() ? a : b;
        result.report.skipped.push_back(
            {a, b, "row " + std::to_string(lonely.row) + " of " + lonely.sheet + " produced no instance"});
        continue;
      }
      Triple lifted{ia->second, vocab::route(predicate, struck), ib->second};
      if (seen.insert(lifted).second) result.knowledge.push_back(lifted);
    }
  }
  result.report.added = result.knowledge.size();
  return result;
}

}  // namespace sheetgraph
