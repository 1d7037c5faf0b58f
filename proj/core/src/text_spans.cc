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

#include "sheetgraph/workbook.h"

namespace sheetgraph {

bool span_struck(const Cell &cell, std::size_t begin, std::size_t end) {
  if (!cell.is_text() || begin >= end) return false;
  std::size_t offset = 0;
  for (const auto &run : cell.runs) {
    std::size_t run_end = offset + run.text.size();
    if (run.struck && offset < end && begin < run_end) return true;
    offset = run_end;
  }
  return false;
}

std::vector<VisibleSpan> visible_spans(const Cell &cell) {
  std::vector<VisibleSpan> spans;
  std::size_t full = 0;
  std::size_t visible = 0;
  for (const auto &run : cell.runs) {
    if (!run.struck) {
      spans.push_back({visible, full, run.text.size()});
      visible += run.text.size();
    }
    full += run.text.size();
  }
  return spans;
}

}  // namespace sheetgraph
