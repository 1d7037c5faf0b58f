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

namespace {

struct Member {
  CellRef ref;
  std::string key;
  bool struck = false;
};

// Key of a matching cell: the chosen group, or the trimmed text when the
// regex has no groups.
Member member_of(const Cell &cell, const boost::smatch &m, const boost::regex &re, int group) {
  Member member{cell.ref, {}, false};
  if (re.mark_count() == 0 || !m[group].matched) {
    member.key = trim(cell.text());
    member.struck = span_struck(cell, 0, cell.text().size());
    return member;
  }
  member.key = m[group].str();
  auto begin = static_cast<std::size_t>(m.position(group));
  member.struck = span_struck(cell, begin, begin + member.key.size());
  return member;
}

bool holds(JoinCondition condition, const std::string &a, const std::string &b) {
  switch (condition) {
    case JoinCondition::kPrefix: return b.size() >= a.size() && b.compare(0, a.size(), a) == 0;
    case JoinCondition::kSuffix:
      return b.size() >= a.size() && b.compare(b.size() - a.size(), a.size(), a) == 0;
    case JoinCondition::kEqual:
    case JoinCondition::kCustom: return a == b;
  }
  return false;
}

}  // namespace

std::string_view join_condition_name(JoinCondition condition) {
  switch (condition) {
    case JoinCondition::kPrefix: return "prefix";
    case JoinCondition::kEqual: return "equal";
    case JoinCondition::kSuffix: return "suffix";
    case JoinCondition::kCustom: return "custom";
  }
  return "";
}

JoinCondition parse_join_condition(std::string_view name) {
  for (auto c : {JoinCondition::kPrefix, JoinCondition::kEqual, JoinCondition::kSuffix,
                 JoinCondition::kCustom}) {
    if (join_condition_name(c) == name) return c;
  }
  throw Error(ErrorCode::kParameter, "unknown join condition '" + std::string(name) + "'",
              "condition");
}

RelationshipStaging relationship_discover(const Corpus &corpus, const Selection &selection,
                                          const RelationshipParams &params) {
  boost::regex re_a = internal::compile_regex(params.regex_a, "regex_a");
  boost::regex re_b = internal::compile_regex(params.regex_b, "regex_b");
  int group_a = 1;
  int group_b = 1;
  if (params.condition == JoinCondition::kCustom) {
    group_a = params.group_a;
    group_b = params.group_b;
    if (group_a < 0 || static_cast<std::size_t>(group_a) > re_a.mark_count()) {
      throw Error(ErrorCode::kParameter, "regex_a has no group " + std::to_string(group_a), "group_a");
    }
    if (group_b < 0 || static_cast<std::size_t>(group_b) > re_b.mark_count()) {
      throw Error(ErrorCode::kParameter, "regex_b has no group " + std::to_string(group_b), "group_b");
    }
  }

  RelationshipStaging staging;
  staging.params = params;
  std::vector<Member> as;
  std::vector<Member> bs;
  for (const SelectedCell &sel : corpus.select(selection)) {
    if (!sel.cell->is_text()) continue;
    const std::string &text = sel.cell->text();
    boost::smatch ma;
    boost::smatch mb;
    bool in_a = internal::search(text, ma, re_a);
    bool in_b = internal::search(text, mb, re_b);
    if (in_a) {
      as.push_back(member_of(*sel.cell, ma, re_a, group_a));
      staging.group_a.push_back(sel.ref);
      if (in_b) staging.warnings.push_back({sel.ref, "matches both regexes; kept in group A"});
    } else if (in_b) {
      bs.push_back(member_of(*sel.cell, mb, re_b, group_b));
      staging.group_b.push_back(sel.ref);
    }
  }

  for (const Member &a : as) {
    for (const Member &b : bs) {
      ++staging.comparisons;
      if (!a.key.empty() && holds(params.condition, a.key, b.key)) {
        staging.pairs.push_back({a.ref, b.ref, a.struck || b.struck});
      }
    }
  }
  return staging;
}

}  // namespace sheetgraph
