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

#include "sheetgraph/rdf.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>

#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {
namespace {

bool is_unreserved(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string percent_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (is_unreserved(c)) {
      out += ch;
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::optional<std::string> percent_decode(std::string_view text) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out += text[i];
      continue;
    }
    if (i + 2 >= text.size()) return std::nullopt;
    int hi = hex(text[i + 1]);
    int lo = hex(text[i + 2]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out += static_cast<char>(hi << 4 | lo);
    i += 2;
  }
  return out;
}

bool is_absolute_uri(std::string_view uri) {
  auto colon = uri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(uri[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    auto c = static_cast<unsigned char>(uri[i]);
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  if (colon + 1 == uri.size()) return false;
  for (char ch : uri) {
    auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' || ch == '}' ||
        ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
      return false;
    }
  }
  return true;
}

std::string trim(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string slug(std::string_view label) {
  std::string collapsed;
  bool pending_space = false;
  for (char c : trim(label)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space) collapsed += ' ';
    pending_space = false;
    collapsed += c;
  }
  return percent_encode(collapsed);
}

Resource::Resource(std::string uri) : uri_(std::move(uri)) {
  if (!is_absolute_uri(uri_)) {
    throw Error(ErrorCode::kParameter, "not an absolute IRI: '" + uri_ + "'", "uri");
  }
}

std::string_view datatype_name(Datatype type) {
  switch (type) {
    case Datatype::kString: return "string";
    case Datatype::kInteger: return "integer";
    case Datatype::kDecimal: return "decimal";
    case Datatype::kBoolean: return "boolean";
    case Datatype::kDate: return "date";
  }
  return "string";
}

std::optional<Datatype> datatype_from_name(std::string_view name) {
  for (Datatype t : {Datatype::kString, Datatype::kInteger, Datatype::kDecimal,
                     Datatype::kBoolean, Datatype::kDate}) {
    if (datatype_name(t) == name) return t;
  }
  if (name == "int") return Datatype::kInteger;
  return std::nullopt;
}

const std::string &datatype_uri(Datatype type) {
  static const std::array<std::string, 5> kUris = {
      std::string(ns::kXsd) + "string", std::string(ns::kXsd) + "integer",
      std::string(ns::kXsd) + "decimal", std::string(ns::kXsd) + "boolean",
      std::string(ns::kXsd) + "date"};
  return kUris[static_cast<std::size_t>(type)];
}

std::optional<Datatype> datatype_from_uri(std::string_view uri) {
  for (Datatype t : {Datatype::kString, Datatype::kInteger, Datatype::kDecimal,
                     Datatype::kBoolean, Datatype::kDate}) {
    if (datatype_uri(t) == uri) return t;
  }
  return std::nullopt;
}

bool valid_lexical(std::string_view lexical, Datatype type) {
  switch (type) {
    case Datatype::kString:
      return true;
    case Datatype::kInteger: {
      std::string_view digits = lexical;
      if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) digits.remove_prefix(1);
      return all_digits(digits);
    }
    case Datatype::kDecimal: {
      std::string_view s = lexical;
      if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
      auto dot = s.find('.');
      if (dot == std::string_view::npos) return all_digits(s);
      std::string_view whole = s.substr(0, dot);
      std::string_view frac = s.substr(dot + 1);
      if (whole.empty() && frac.empty()) return false;
      return (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac));
    }
    case Datatype::kBoolean:
      return lexical == "true" || lexical == "false" || lexical == "1" || lexical == "0";
    case Datatype::kDate: {
      if (lexical.size() != 10 || lexical[4] != '-' || lexical[7] != '-') return false;
      std::string_view y = lexical.substr(0, 4), m = lexical.substr(5, 2), d = lexical.substr(8, 2);
      if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return false;
      std::chrono::year_month_day ymd{std::chrono::year{std::stoi(std::string(y))},
                                      std::chrono::month{static_cast<unsigned>(std::stoi(std::string(m)))},
                                      std::chrono::day{static_cast<unsigned>(std::stoi(std::string(d)))}};
      return ymd.ok();
    }
  }
  return false;
}

Literal::Literal(std::string lexical, Datatype type) : lexical_(std::move(lexical)), datatype_(type) {
  if (!valid_lexical(lexical_, datatype_)) {
    throw Error(ErrorCode::kParameter,
                "'" + lexical_ + "' is not a valid " + std::string(datatype_name(datatype_)),
                "datatype");
  }
}

std::optional<Literal> coerce_literal(std::string_view text, Datatype type) {
  std::string value = type == Datatype::kString ? std::string(text) : trim(text);
  if (type == Datatype::kBoolean) {
    std::string l = lower(value);
    if (l == "true" || l == "1") return Literal("true", type);
    if (l == "false" || l == "0") return Literal("false", type);
    return std::nullopt;
  }
  if (!valid_lexical(value, type)) return std::nullopt;
  return Literal(std::move(value), type);
}

}  // namespace sheetgraph
