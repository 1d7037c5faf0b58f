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

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <set>

#include "readers.h"
#include "sheetgraph/error.h"

namespace sheetgraph {

std::string to_string(const CellRef &ref) {
  return ref.sheet + "!R" + std::to_string(ref.row) + "C" + std::to_string(ref.column);
}

CellKind kind_of(const CellValue &value) {
  switch (value.index()) {
    case 1: return CellKind::kText;
    case 2: return CellKind::kNumber;
    case 3: return CellKind::kDateSerial;
    case 4: return CellKind::kFormula;
    default: return CellKind::kEmpty;
  }
}

std::string_view kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::kEmpty: return "empty";
    case CellKind::kText: return "text";
    case CellKind::kNumber: return "number";
    case CellKind::kDateSerial: return "date-serial";
    case CellKind::kFormula: return "formula";
  }
  return "empty";
}

const std::string &Cell::text() const {
  if (const auto *t = std::get_if<TextValue>(&value)) return t->text;
  throw Error(ErrorCode::kType, "cell " + to_string(ref) + " holds " +
                                    std::string(kind_name(kind())) + ", not text");
}

std::vector<TextRun> normalize_runs(std::vector<TextRun> runs) {
  std::vector<TextRun> out;
  for (auto &run : runs) {
    if (run.text.empty()) continue;
    if (!out.empty() && out.back().struck == run.struck) {
      out.back().text += run.text;
    } else {
      out.push_back(std::move(run));
    }
  }
  return out;
}

std::string visible_text(const Cell &cell, bool include_struck) {
  const std::string &full = cell.text();
  if (include_struck) return full;
  std::string out;
  for (const auto &run : cell.runs) {
    if (!run.struck) out += run.text;
  }
  return out;
}

void Sheet::put(Cell cell) {
  if (cell.kind() == CellKind::kEmpty) return;
  if (cell.is_text() && cell.text().empty()) return;
  CellPos pos{cell.ref.row, cell.ref.column};
  cells_.insert_or_assign(pos, std::move(cell));
}

const Cell *Sheet::find(std::uint32_t row, std::uint32_t column) const {
  auto it = cells_.find(CellPos{row, column});
  return it == cells_.end() ? nullptr : &it->second;
}

std::uint32_t Sheet::row_count() const {
  return cells_.empty() ? 0 : cells_.rbegin()->first.row + 1;
}

std::uint32_t Sheet::column_count() const {
  std::uint32_t max_column = 0;
  for (const auto &[pos, cell] : cells_) max_column = std::max(max_column, pos.column + 1);
  return max_column;
}

Workbook::Workbook(std::string id, std::string checksum, std::vector<Sheet> sheets)
    : id_(std::move(id)), checksum_(std::move(checksum)), sheets_(std::move(sheets)) {
  std::set<std::string_view> names;
  for (const auto &sheet : sheets_) {
    if (!names.insert(sheet.name()).second) {
      throw Error(ErrorCode::kParse, "duplicate sheet name " + sheet.name());
    }
  }
}

const Sheet *Workbook::find_sheet(std::string_view name) const {
  for (const auto &sheet : sheets_) {
    if (sheet.name() == name) return &sheet;
  }
  return nullptr;
}

const Sheet &Workbook::sheet(std::string_view name) const {
  if (const Sheet *s = find_sheet(name)) return *s;
  throw Error(ErrorCode::kLookup, "unknown sheet '" + std::string(name) + "' in workbook " + id_,
              "sheet");
}

WorkbookFormat parse_workbook_format(std::string_view tag) {
  std::string lower(tag);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "xlsx") return WorkbookFormat::kXlsx;
  if (lower == "csv") return WorkbookFormat::kCsv;
  throw Error(ErrorCode::kConfig, "unsupported workbook format '" + std::string(tag) + "'",
              "format");
}

std::string_view format_tag(WorkbookFormat format) {
  return format == WorkbookFormat::kXlsx ? "xlsx" : "csv";
}

std::string content_checksum(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

Workbook load_workbook(std::string_view bytes, WorkbookFormat format) {
  std::string checksum = content_checksum(bytes);
  // 16 hex digits of the digest, prefixed so the id never starts with a digit.
  std::string id = "wb" + checksum.substr(7, 16);
  std::vector<Sheet> sheets = format == WorkbookFormat::kXlsx ? internal::read_xlsx(bytes, id)
                                                              : internal::read_csv(bytes, id);
  return Workbook(std::move(id), std::move(checksum), std::move(sheets));
}

}  // namespace sheetgraph
