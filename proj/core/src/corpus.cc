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

#include "sheetgraph/corpus.h"

#include <charconv>
#include <set>

#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {
namespace {

[[noreturn]] void unresolvable(std::string_view uri, const std::string &why) {
  throw Error(ErrorCode::kResolution, "cannot resolve deep link <" + std::string(uri) + ">: " + why,
              "uri");
}

// Canonical decimal (no sign, no leading zeros) that fits in 32 bits.
bool parse_index(std::string_view digits, std::uint32_t &out) {
  if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

Corpus::Corpus(std::string base_uri) : base_uri_(std::move(base_uri)) {
  if (!is_absolute_uri(base_uri_)) {
    throw Error(ErrorCode::kConfig, "project base URI must be absolute: " + base_uri_, "base_uri");
  }
  if (!base_uri_.ends_with('/') && !base_uri_.ends_with('#')) base_uri_ += '/';
}

const Workbook &Corpus::add(Workbook workbook) {
  return add(std::make_shared<const Workbook>(std::move(workbook)));
}

const Workbook &Corpus::add(std::shared_ptr<const Workbook> workbook) {
  auto [it, inserted] = workbooks_.try_emplace(workbook->id(), workbook);
  return *it->second;
}

const Workbook *Corpus::find_workbook(std::string_view id) const {
  auto it = workbooks_.find(id);
  return it == workbooks_.end() ? nullptr : it->second.get();
}

const Workbook &Corpus::workbook(std::string_view id) const {
  if (const Workbook *wb = find_workbook(id)) return *wb;
  throw Error(ErrorCode::kLookup, "unknown workbook '" + std::string(id) + "'", "workbook_id");
}

std::vector<std::shared_ptr<const Workbook>> Corpus::workbooks() const {
  std::vector<std::shared_ptr<const Workbook>> out;
  for (const auto &[id, wb] : workbooks_) out.push_back(wb);
  return out;
}

const Cell *Corpus::find_cell(const CellRef &ref) const {
  return workbook(ref.workbook_id).sheet(ref.sheet).find(ref.row, ref.column);
}

DeepLinkUri Corpus::deep_link(const CellRef &ref) const {
  workbook(ref.workbook_id);
  return DeepLinkUri{base_uri_ + "workbook/" + ref.workbook_id + "/sheet/" +
                     percent_encode(ref.sheet) + "/cell/R" + std::to_string(ref.row) + "C" +
                     std::to_string(ref.column)};
}

CellRef Corpus::resolve_deep_link(std::string_view uri) const {
  if (!uri.starts_with(base_uri_)) unresolvable(uri, "outside project namespace");
  std::string_view path = uri.substr(base_uri_.size());

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = path.find('/', start);
    parts.push_back(path.substr(start, slash == std::string_view::npos ? slash : slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() != 6 || parts[0] != "workbook" || parts[2] != "sheet" || parts[4] != "cell") {
    unresolvable(uri, "not a cell path");
  }

  CellRef ref;
  ref.workbook_id = std::string(parts[1]);
  const Workbook *wb = find_workbook(ref.workbook_id);
  if (!wb) unresolvable(uri, "unknown workbook");

  auto sheet = percent_decode(parts[3]);
  if (!sheet || percent_encode(*sheet) != parts[3]) unresolvable(uri, "bad sheet encoding");
  if (!wb->find_sheet(*sheet)) unresolvable(uri, "unknown sheet");
  ref.sheet = std::move(*sheet);

  std::string_view rc = parts[5];
  auto c_at = rc.find('C');
  if (!rc.starts_with('R') || c_at == std::string_view::npos ||
      !parse_index(rc.substr(1, c_at - 1), ref.row) ||
      !parse_index(rc.substr(c_at + 1), ref.column)) {
    unresolvable(uri, "bad cell coordinates");
  }
  return ref;
}

std::vector<SelectedCell> Corpus::select(const Selection &selection) const {
  std::vector<SelectedCell> out;
  std::set<CellRef> seen;
  for (const auto &ref : selection.cells) {
    const Cell *cell = find_cell(ref);
    if (!cell || cell->kind() == CellKind::kFormula) continue;
    if (!seen.insert(ref).second) continue;
    out.push_back({ref, cell});
  }
  return out;
}

}  // namespace sheetgraph
