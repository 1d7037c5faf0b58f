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

#include "regex_util.h"
#include "sheetgraph/extractors.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

std::string_view regex_mode_name(RegexMode mode) {
  return mode == RegexMode::kLiteral ? "literal" : "constant";
}

RegexMode parse_regex_mode(std::string_view name) {
  if (name == "literal") return RegexMode::kLiteral;
  if (name == "constant") return RegexMode::kConstant;
  throw Error(ErrorCode::kParameter, "unknown regex mode '" + std::string(name) + "'", "mode");
}

Resource RegexParams::effective_property() const {
  if (property) return *property;
  return mode == RegexMode::kLiteral ? vocab::has_literal() : vocab::type_hint();
}

RegexStaging regex_extract(const Corpus &corpus, const Selection &selection,
                           const RegexParams &params) {
  boost::regex re = internal::compile_regex(params.pattern, "pattern");
  if (params.mode == RegexMode::kLiteral) {
    if (params.group < 0 || static_cast<std::size_t>(params.group) > re.mark_count()) {
      throw Error(ErrorCode::kParameter,
                  "pattern has no group " + std::to_string(params.group), "group");
    }
  } else if (!params.constant) {
    throw Error(ErrorCode::kParameter, "constant mode needs a constant resource", "constant");
  }

  RegexStaging staging;
  staging.params = params;
  for (const SelectedCell &sel : corpus.select(selection)) {
    const Cell &cell = *sel.cell;
    if (!cell.is_text()) {
      staging.skipped.push_back(sel.ref);
      continue;
    }
    const std::string &text = cell.text();
    boost::smatch m;
    if (!internal::search(text, m, re)) {
      staging.missed.push_back({sel.ref, "no match"});
      continue;
    }
    int group = params.mode == RegexMode::kLiteral ? params.group : 0;
    if (!m[group].matched) {
      staging.missed.push_back({sel.ref, "group " + std::to_string(group) + " did not participate"});
      continue;
    }

    RegexMatch match;
    match.ref = sel.ref;
    match.extracted = m[group].str();
    if (params.mode == RegexMode::kLiteral) {
      match.literal = coerce_literal(match.extracted, params.datatype);
      if (!match.literal) {
        staging.missed.push_back({sel.ref, "cannot read '" + match.extracted + "' as " +
                                               std::string(datatype_name(params.datatype))});
        continue;
      }
    }
    auto begin = static_cast<std::size_t>(m.position(group));
    match.struck = span_struck(cell, begin, begin + static_cast<std::size_t>(m.length(group)));

    auto whole_begin = static_cast<std::size_t>(m.position());
    auto whole_end = whole_begin + static_cast<std::size_t>(m.length());
    std::string before = trim(std::string_view(text).substr(0, whole_begin));
    std::string after = trim(std::string_view(text).substr(whole_end));
    match.remainder = before.empty() || after.empty() ? before + after : before + " " + after;
    if (!match.remainder.empty()) {
      match.remainder_struck =
          span_struck(cell, 0, whole_begin) || span_struck(cell, whole_end, text.size());
    }
    staging.matched.push_back(std::move(match));
  }
  return staging;
}

}  // namespace sheetgraph
