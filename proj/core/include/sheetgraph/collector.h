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

// Row-to-instance collection over committed annotations, and lifting of
// cell-level relationship annotations to instance level.

#ifndef SHEETGRAPH_COLLECTOR_H_
#define SHEETGRAPH_COLLECTOR_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheetgraph/corpus.h"
#include "sheetgraph/graph.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {

struct CollectorConfig {
  std::string workbook_id;
  std::string sheet;
  std::uint32_t first_row = 0;
  std::optional<std::uint32_t> last_row;  // inclusive; unset means the last row
  Resource default_type;
  std::vector<Resource> required_properties;
  std::optional<Resource> instance_id_property;
};

struct InstanceEntry {
  Resource instance;
  std::uint32_t row = 0;
  std::vector<Resource> types;
  std::size_t property_count = 0;  // copied annotations
};

struct SkippedRow {
  std::uint32_t row = 0;
  std::string reason;
};

struct InstanceReport {
  std::string workbook_id;
  std::string sheet;
  std::vector<InstanceEntry> instances;
  std::vector<SkippedRow> skipped;
};

struct RowKey {
  std::string workbook_id;
  std::string sheet;
  std::uint32_t row = 0;
  auto operator<=>(const RowKey &) const = default;
};

using InstanceMap = std::map<RowKey, Resource>;

struct CollectionResult {
  InstanceReport report;
  std::vector<Triple> knowledge;  // triples to add
  InstanceMap instances;
};

// Scans rows carrying at least one annotation other than relatedCell.
// Every annotation (p, o) of the row's cells becomes (instance, p, o),
// except that typeHint becomes rdf:type and remainderComment becomes
// rdfs:comment; struck variants are copied unchanged. Rows without a
// (non-struck) typeHint are typed with default_type.
//
// Instance URIs: <base>instance/<workbook>/<sheet>/R<row>[-<slug(id)>].
CollectionResult collect_instances(const Corpus &corpus, const Dataset &dataset,
                                   const CollectorConfig &config);

struct LiftSkip {
  CellRef a;
  CellRef b;
  std::string reason;
};

struct LiftReport {
  std::size_t added = 0;
  std::vector<LiftSkip> skipped;
};

struct LiftResult {
  LiftReport report;  // added counts candidate triples; the session corrects it
  std::vector<Triple> knowledge;
};

// (cellA, relatedCell, cellB) yields (instanceA, predicate, instanceB);
// relatedCellStruck yields the struck variant of predicate.
LiftResult lift_relationships(const Corpus &corpus, const Graph &matching,
                              const InstanceMap &instances, const Resource &predicate);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_COLLECTOR_H_
