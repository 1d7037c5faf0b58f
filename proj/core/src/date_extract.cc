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

#include <charconv>
#include <chrono>
#include <cmath>
#include <cctype>
#include <cstdio>

#include "regex_util.h"
#include "sheetgraph/extractors.h"

namespace sheetgraph {

namespace {

using std::chrono::day;
using std::chrono::month;
using std::chrono::sys_days;
using std::chrono::year;
using std::chrono::year_month_day;

// Serial values further than this from the epoch are rejected outright.
constexpr double kMaxSerial = 2'000'000;

std::optional<year_month_day> parse_iso(std::string_view text) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto num = [&](std::size_t at, std::size_t len, auto &out) {
    auto [p, ec] = std::from_chars(text.data() + at, text.data() + at + len, out);
    return ec == std::errc() && p == text.data() + at + len;
  };
  if (!num(0, 4, y) || !num(5, 2, m) || !num(8, 2, d)) return std::nullopt;
  year_month_day ymd{year{y}, month{m}, day{d}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

std::optional<std::string> format_iso(const year_month_day &ymd) {
  int y = static_cast<int>(ymd.year());
  if (!ymd.ok() || y < 0 || y > 9999) return std::nullopt;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return std::string(buf);
}

year_month_day epoch_of(const std::string &epoch) {
  auto ymd = parse_iso(epoch);
  if (!ymd) throw Error(ErrorCode::kParameter, "invalid epoch '" + epoch + "'", "epoch");
  return *ymd;
}

std::optional<unsigned> month_from_name(std::string name) {
  static const char *kNames[] = {"jan", "feb", "mar", "apr", "may", "jun",
                                 "jul", "aug", "sep", "oct", "nov", "dec"};
  if (name.size() < 3) return std::nullopt;
  for (char &ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (unsigned i = 0; i < 12; ++i) {
    if (name.compare(0, 3, kNames[i]) == 0) return i + 1;
  }
  return std::nullopt;
}

struct CompiledPattern {
  boost::regex re;
  std::string roles;
};

struct Parsed {
  std::optional<std::string> iso;
  std::string reason;
};

Parsed interpret(const boost::smatch &m, const std::string &roles) {
  std::optional<int> y;
  std::optional<unsigned> mo;
  unsigned d = 1;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (!m[i + 1].matched || roles[i] == '_') continue;
    std::string part = m[i + 1].str();
    if (roles[i] == 'N') {
      mo = month_from_name(part);
      if (!mo) return {std::nullopt, "unknown month name '" + part + "'"};
      continue;
    }
    long value = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || p != part.data() + part.size()) {
      return {std::nullopt, "not a number: '" + part + "'"};
    }
    switch (roles[i]) {
      case 'Y': y = static_cast<int>(part.size() == 2 ? 2000 + value : value); break;
      case 'M': mo = static_cast<unsigned>(value); break;
      case 'D': d = static_cast<unsigned>(value); break;
    }
  }
  if (!y || !mo) return {std::nullopt, "year or month missing"};
  year_month_day ymd{year{*y}, month{*mo}, day{d}};
  auto iso = format_iso(ymd);
  if (!iso) {
    return {std::nullopt, "invalid calendar date " + std::to_string(*y) + "-" +
                              std::to_string(*mo) + "-" + std::to_string(d)};
  }
  return {iso, {}};
}

}  // namespace

std::string add_days(const std::string &epoch, std::int64_t days) {
  sys_days base{epoch_of(epoch)};
  auto iso = format_iso(year_month_day{base + std::chrono::days{days}});
  if (!iso) throw Error(ErrorCode::kParameter, "date out of range", "epoch");
  return *iso;
}

DateStaging date_extract(const Corpus &corpus, const Selection &selection,
                         const DateParams &params) {
  year_month_day epoch = epoch_of(params.epoch);
  std::vector<CompiledPattern> patterns;
  for (const DatePattern &p : params.patterns) {
    CompiledPattern c{internal::compile_regex(p.regex, "patterns"), p.roles};
    if (c.roles.size() != c.re.mark_count()) {
      throw Error(ErrorCode::kParameter,
                  "roles '" + c.roles + "' do not match the " + std::to_string(c.re.mark_count()) +
                      " group(s) of '" + p.regex + "'",
                  "roles");
    }
    if (c.roles.find_first_not_of("YMND_") != std::string::npos ||
        c.roles.find('Y') == std::string::npos ||
        c.roles.find_first_of("MN") == std::string::npos) {
      throw Error(ErrorCode::kParameter, "roles '" + c.roles + "' need Y and M or N", "roles");
    }
    patterns.push_back(std::move(c));
  }

  DateStaging staging;
  staging.params = params;
  for (const SelectedCell &sel : corpus.select(selection)) {
    const Cell &cell = *sel.cell;
    std::optional<double> serial;
    if (const auto *n = std::get_if<NumberValue>(&cell.value)) serial = n->number;
    if (const auto *d = std::get_if<DateSerialValue>(&cell.value)) serial = static_cast<double>(d->days);
    if (serial) {
      if (!std::isfinite(*serial) || std::fabs(*serial) > kMaxSerial) {
        staging.outliers.push_back({sel.ref, "serial out of range"});
        continue;
      }
      auto days = static_cast<std::int64_t>(std::floor(*serial));
      auto iso = format_iso(year_month_day{sys_days{epoch} + std::chrono::days{days}});
      if (!iso) {
        staging.outliers.push_back({sel.ref, "serial out of range"});
        continue;
      }
      staging.hits.push_back({sel.ref, *iso, std::nullopt, false});
      continue;
    }
    if (!cell.is_text()) {
      staging.outliers.push_back({sel.ref, "not a date value"});
      continue;
    }
    const std::string &text = cell.text();
    bool done = false;
    for (std::size_t i = 0; i < patterns.size() && !done; ++i) {
      boost::smatch m;
      if (!internal::search(text, m, patterns[i].re)) continue;
      done = true;
      auto result = interpret(m, patterns[i].roles);
      if (!result.iso) {
        staging.outliers.push_back({sel.ref, result.reason});
        break;
      }
      auto begin = static_cast<std::size_t>(m.position());
      bool struck = span_struck(cell, begin, begin + static_cast<std::size_t>(m.length()));
      staging.hits.push_back({sel.ref, *result.iso, i, struck});
    }
    if (!done) staging.outliers.push_back({sel.ref, "no date pattern matched"});
  }
  return staging;
}

}  // namespace sheetgraph
