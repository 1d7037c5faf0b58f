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

#include <map>
#include <utility>

#include "sheetgraph/error.h"
#include "sheetgraph/extractors.h"
#include "sheetgraph/transform.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace {

struct Piece {
  std::string text;
  bool struck;
};

std::vector<Piece> pieces_of(const Cell &cell, bool include_struck) {
  bool any_struck = false;
  for (const auto &run : cell.runs) any_struck |= run.struck;
  if (!any_struck) return {{cell.text(), false}};
  std::vector<Piece> pieces;
  for (const auto &run : cell.runs) {
    if (run.struck && !include_struck) continue;
    pieces.push_back({run.text, run.struck});
  }
  return pieces;
}

}  // namespace

StatSummary descriptive_statistics(const Corpus &corpus, const Selection &selection,
                                   const StatsParams &params) {
  if (selection.cells.empty()) {
    throw Error(ErrorCode::kParameter, "selection is empty", "selection");
  }
  std::optional<TransformExpr> expr;
  if (params.transform && !params.transform->empty()) {
    expr = TransformExpr::compile(*params.transform);
  }

  StatSummary summary;
  summary.params = params;
  std::map<std::string, std::size_t, std::less<>> row_of;

  for (const SelectedCell &sel : corpus.select(selection)) {
    if (!sel.cell->is_text()) {
      summary.skipped.push_back(sel.ref);
      continue;
    }
    std::vector<std::pair<std::string, bool>> values;
    try {
      for (const Piece &piece : pieces_of(*sel.cell, params.include_struck)) {
        std::vector<std::string> out =
            expr ? expr->apply(piece.text) : std::vector<std::string>{piece.text};
        for (auto &v : out) {
          std::string t = trim(v);
          if (!t.empty()) values.emplace_back(std::move(t), piece.struck);
        }
      }
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kTransform) throw;
      summary.misses.push_back({sel.ref, e.what()});
      continue;
    }
    if (values.empty()) {
      summary.misses.push_back({sel.ref, "no value after transform"});
      continue;
    }
    for (auto &[value, struck] : values) {
      auto it = row_of.find(value);
      if (it == row_of.end()) {
        it = row_of.emplace(value, summary.rows.size()).first;
        StatRow row;
        row.value = value;
        row.preferred_label = value;
        summary.rows.push_back(std::move(row));
      }
      StatRow &row = summary.rows[it->second];
      ++row.count;
      row.occurrences.push_back({sel.ref, struck});
    }
  }
  return summary;
}

}  // namespace sheetgraph
