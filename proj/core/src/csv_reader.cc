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

#include <cctype>
#include <charconv>

#include "readers.h"
#include "sheetgraph/error.h"

namespace sheetgraph::internal {
namespace {

// [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
bool is_decimal_number(std::string_view s) {
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i - start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = digits();
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    frac_digits = digits();
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (digits() == 0) return false;
  }
  return i == s.size();
}

}  // namespace

std::vector<Sheet> read_csv(std::string_view bytes, const std::string &workbook_id) {
  Sheet sheet("Sheet1");
  std::size_t pos = 0;
  if (bytes.starts_with("\xEF\xBB\xBF")) pos = 3;

  std::uint32_t row = 0;
  std::uint32_t column = 0;
  std::string field;

  auto emit = [&] {
    if (!field.empty()) {
      CellRef ref{workbook_id, sheet.name(), row, column};
      std::string_view text(field);
      if (is_decimal_number(text)) {
        double number = 0;
        // from_chars rejects an explicit plus sign.
        const char *begin = field.data() + (field[0] == '+' ? 1 : 0);
        std::from_chars(begin, field.data() + field.size(), number);
        sheet.put(Cell{std::move(ref), NumberValue{number}, {}});
      } else {
        sheet.put(Cell{std::move(ref), TextValue{field}, {TextRun{field, false}}});
      }
    }
    field.clear();
  };

  while (pos < bytes.size()) {
    if (bytes[pos] == '"') {
      std::size_t open_at = pos;
      ++pos;
      bool closed = false;
      while (pos < bytes.size()) {
        char c = bytes[pos];
        if (c == '"') {
          if (pos + 1 < bytes.size() && bytes[pos + 1] == '"') {
            field += '"';
            pos += 2;
            continue;
          }
          ++pos;
          closed = true;
          break;
        }
        field += c;
        ++pos;
      }
      if (!closed) throw ParseError("csv: unterminated quoted field", open_at, row + 1);
      if (pos < bytes.size() && bytes[pos] != ',' && bytes[pos] != '\n' && bytes[pos] != '\r') {
        throw ParseError("csv: unexpected character after closing quote", pos, row + 1);
      }
    } else {
      while (pos < bytes.size() && bytes[pos] != ',' && bytes[pos] != '\n' && bytes[pos] != '\r') {
        if (bytes[pos] == '"') throw ParseError("csv: quote inside unquoted field", pos, row + 1);
        field += bytes[pos];
        ++pos;
      }
    }
    emit();

    if (pos >= bytes.size()) break;
    if (bytes[pos] == ',') {
      ++pos;
      ++column;
      // A trailing separator at end of input still opens an (empty) field.
      continue;
    }
    if (bytes[pos] == '\r') ++pos;
    if (pos < bytes.size() && bytes[pos] == '\n') ++pos;
    ++row;
    column = 0;
  }

  std::vector<Sheet> sheets;
  sheets.push_back(std::move(sheet));
  return sheets;
}

}  // namespace sheetgraph::internal
