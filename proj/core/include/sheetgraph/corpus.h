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

// The set of workbooks loaded into one project, and the per-cell deep links
// that name their cells:
//
//   <base>workbook/<id>/sheet/<percent-encoded name>/cell/R<row>C<column>
//
// Rows and columns are 0-based. The scheme is bijective with CellRef, so no
// lookup table is kept.

#ifndef SHEETGRAPH_CORPUS_H_
#define SHEETGRAPH_CORPUS_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sheetgraph/workbook.h"

namespace sheetgraph {

struct DeepLinkUri {
  std::string uri;
  auto operator<=>(const DeepLinkUri &) const = default;
};

struct Selection {
  std::vector<CellRef> cells;
};

// A selected cell that exists and is eligible for extraction.
struct SelectedCell {
  CellRef ref;
  const Cell *cell = nullptr;
};

class Corpus {
 public:
  // base_uri must be absolute; a trailing '/' is appended when missing.
  explicit Corpus(std::string base_uri);

  const std::string &base_uri() const { return base_uri_; }

  // Registers the workbook; re-adding byte-identical input is a no-op.
  const Workbook &add(Workbook workbook);
  const Workbook &add(std::shared_ptr<const Workbook> workbook);

  const Workbook *find_workbook(std::string_view id) const;
  const Workbook &workbook(std::string_view id) const;  // throws kLookup
  std::vector<std::shared_ptr<const Workbook>> workbooks() const;

  // nullptr for empty cells; throws kLookup for unknown workbook or sheet.
  const Cell *find_cell(const CellRef &ref) const;

  DeepLinkUri deep_link(const CellRef &ref) const;
  // Throws kResolution for URIs outside this project's namespace, malformed
  // paths, non-canonical encodings, or unknown workbooks/sheets.
  CellRef resolve_deep_link(std::string_view uri) const;

  // Resolves a selection to extraction inputs: duplicates collapse to their
  // first occurrence, empty cells and formula cells are dropped. Unknown
  // workbooks or sheets throw kLookup.
  std::vector<SelectedCell> select(const Selection &selection) const;

 private:
  std::string base_uri_;
  std::map<std::string, std::shared_ptr<const Workbook>, std::less<>> workbooks_;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_CORPUS_H_
