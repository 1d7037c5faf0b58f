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

// Typed, immutable spreadsheet model with strike-through text runs.

#ifndef SHEETGRAPH_WORKBOOK_H_
#define SHEETGRAPH_WORKBOOK_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sheetgraph {

struct CellRef {
  std::string workbook_id;
  std::string sheet;
  std::uint32_t row = 0;     // 0-based
  std::uint32_t column = 0;  // 0-based

  auto operator<=>(const CellRef &) const = default;
  bool operator==(const CellRef &) const = default;
};

// Display form "Sheet1!R3C2" (0-based indices), used in messages and tests.
std::string to_string(const CellRef &ref);

struct TextRun {
  std::string text;
  bool struck = false;

  bool operator==(const TextRun &) const = default;
};

struct TextValue {
  std::string text;
  bool operator==(const TextValue &) const = default;
};
struct NumberValue {
  double number = 0;
  bool operator==(const NumberValue &) const = default;
};
// Whole days as stored by the source; only produced when the source cell
// carries a date number format.
struct DateSerialValue {
  std::int64_t days = 0;
  bool operator==(const DateSerialValue &) const = default;
};
struct FormulaValue {
  std::string source;
  bool operator==(const FormulaValue &) const = default;
};

using CellValue = std::variant<std::monostate, TextValue, NumberValue,
                               DateSerialValue, FormulaValue>;

enum class CellKind { kEmpty, kText, kNumber, kDateSerial, kFormula };

CellKind kind_of(const CellValue &value);
std::string_view kind_name(CellKind kind);

struct Cell {
  CellRef ref;
  CellValue value;
  std::vector<TextRun> runs;  // only for TextValue; concatenates to the text

  CellKind kind() const { return kind_of(value); }
  bool is_text() const { return kind() == CellKind::kText; }
  const std::string &text() const;  // throws kType for non-text cells
};

// Merges adjacent runs with equal strike flags and drops empty runs.
std::vector<TextRun> normalize_runs(std::vector<TextRun> runs);

// Text of the cell with struck runs removed unless include_struck is set.
// Throws Error(kType) for non-text cells.
std::string visible_text(const Cell &cell, bool include_struck);

// True if any byte of [begin, end) of the full cell text lies in a struck
// run. Always false for non-text cells.
bool span_struck(const Cell &cell, std::size_t begin, std::size_t end);

// Byte ranges of the full text that stay visible when struck runs are
// hidden, paired with their offset in the visible text. Used to map match
// positions in visible text back to the full text.
struct VisibleSpan {
  std::size_t visible_begin = 0;
  std::size_t full_begin = 0;
  std::size_t length = 0;
};
std::vector<VisibleSpan> visible_spans(const Cell &cell);

struct CellPos {
  std::uint32_t row = 0;
  std::uint32_t column = 0;
  auto operator<=>(const CellPos &) const = default;
};

class Sheet {
 public:
  using CellMap = std::map<CellPos, Cell>;

  Sheet() = default;
  explicit Sheet(std::string name) : name_(std::move(name)) {}

  const std::string &name() const { return name_; }

  // Stores the cell unless it is empty (Empty variant or zero-length text).
  void put(Cell cell);

  const Cell *find(std::uint32_t row, std::uint32_t column) const;
  const CellMap &cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Extent of the occupied area: max index + 1, zero for an empty sheet.
  std::uint32_t row_count() const;
  std::uint32_t column_count() const;

 private:
  std::string name_;
  CellMap cells_;
};

class Workbook {
 public:
  Workbook() = default;
  Workbook(std::string id, std::string checksum, std::vector<Sheet> sheets);

  // Content-derived identifier: equal for byte-identical inputs.
  const std::string &id() const { return id_; }
  // "sha256:<hex>" over the raw input bytes.
  const std::string &checksum() const { return checksum_; }
  const std::vector<Sheet> &sheets() const { return sheets_; }

  const Sheet *find_sheet(std::string_view name) const;
  const Sheet &sheet(std::string_view name) const;  // throws kLookup

 private:
  std::string id_;
  std::string checksum_;
  std::vector<Sheet> sheets_;
};

enum class WorkbookFormat { kXlsx, kCsv };

// "xlsx" or "csv" (case-insensitive); anything else is a kConfig error.
WorkbookFormat parse_workbook_format(std::string_view tag);
std::string_view format_tag(WorkbookFormat format);

// Parses an office open xml spreadsheet or an RFC 4180 CSV document.
//
// xlsx input keeps rich-text runs with their strike flags and promotes
// numbers to DateSerialValue when the cell's number format is a date
// format. CSV input yields a single sheet named "Sheet1"; fields that are
// complete decimal numbers become NumberValue, everything else TextValue,
// and no run is ever struck.
//
// Throws ParseError carrying a byte offset (and row for CSV) on malformed
// input.
Workbook load_workbook(std::string_view bytes, WorkbookFormat format);

// "sha256:<hex>" of the bytes.
std::string content_checksum(std::string_view bytes);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_WORKBOOK_H_
