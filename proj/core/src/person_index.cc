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

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "sheetgraph/error.h"
#include "sheetgraph/extractors.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace {

std::string fold(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '.') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return trim(out);
}

// Equal, or one is a prefix (an initial is a one-letter prefix).
bool compatible_first(const std::string &a, const std::string &b) {
  std::string fa = fold(a);
  std::string fb = fold(b);
  if (fa.empty() || fb.empty()) return false;
  return fa.rfind(fb, 0) == 0 || fb.rfind(fa, 0) == 0;
}

bool same_last(const std::string &a, const std::string &b) { return fold(a) == fold(b); }

bool has_letter(std::string_view text) {
  return std::any_of(text.begin(), text.end(),
                     [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || (ch & 0x80); });
}

struct Candidate {
  PersonMention mention;
  NameParts name;
  std::size_t order = 0;
};

std::vector<Candidate> detect(const Cell &cell, std::size_t &order) {
  std::vector<Candidate> out;
  for (const TextRun &run : cell.runs) {
    std::size_t begin = 0;
    while (begin <= run.text.size()) {
      std::size_t end = run.text.find_first_of("\n;", begin);
      if (end == std::string::npos) end = run.text.size();
      std::string piece = trim(std::string_view(run.text).substr(begin, end - begin));
      begin = end + 1;

      std::string comment;
      while (!piece.empty() && piece.front() == '(') {
        std::size_t close = piece.find(')');
        if (close == std::string::npos) break;
        if (!comment.empty()) comment += ' ';
        comment += piece.substr(0, close + 1);
        piece = trim(std::string_view(piece).substr(close + 1));
      }
      if (piece.empty() || !has_letter(piece)) continue;
      Candidate c;
      c.mention = {cell.ref, piece, run.struck, comment};
      c.name = parse_person_name(piece);
      if (c.name.last.empty()) continue;
      c.order = order++;
      out.push_back(std::move(c));
    }
  }
  return out;
}

void add_mention(PersonRecord &record, const PersonMention &mention) {
  if (std::find(record.mentions.begin(), record.mentions.end(), mention) == record.mentions.end()) {
    record.mentions.push_back(mention);
  }
}

void keep_longer_first(PersonRecord &record, const std::optional<std::string> &first) {
  if (!first) return;
  if (!record.first_name || fold(*first).size() > fold(*record.first_name).size()) {
    record.first_name = first;
  }
}

std::string name_key(const PersonRecord &r) {
  return (r.first_name ? fold(*r.first_name) : std::string()) + "\x1f" + fold(r.last_name);
}

// Merges records with identical normalized names into the earliest one.
void merge_duplicates(PersonIndex &index) {
  std::map<std::string, std::size_t> first_of;
  std::vector<PersonRecord> kept;
  for (PersonRecord &r : index.records) {
    auto [it, fresh] = first_of.emplace(name_key(r), kept.size());
    if (fresh) {
      kept.push_back(std::move(r));
      continue;
    }
    PersonRecord &target = kept[it->second];
    for (const auto &m : r.mentions) add_mention(target, m);
    target.needs_review = target.needs_review && r.needs_review;
  }
  index.records = std::move(kept);
}

}  // namespace

std::string_view person_edit_name(PersonEditKind kind) {
  switch (kind) {
    case PersonEditKind::kSwapNames: return "swap_names";
    case PersonEditKind::kMerge: return "merge";
    case PersonEditKind::kAddMention: return "add_mention";
    case PersonEditKind::kRemoveMention: return "remove_mention";
    case PersonEditKind::kRemovePerson: return "remove_person";
  }
  return "";
}

PersonEditKind parse_person_edit(std::string_view name) {
  for (auto kind : {PersonEditKind::kSwapNames, PersonEditKind::kMerge, PersonEditKind::kAddMention,
                    PersonEditKind::kRemoveMention, PersonEditKind::kRemovePerson}) {
    if (person_edit_name(kind) == name) return kind;
  }
  throw Error(ErrorCode::kEdit, "unknown person edit '" + std::string(name) + "'", "edit");
}

std::string PersonRecord::label() const {
  return first_name ? *first_name + " " + last_name : last_name;
}

const PersonRecord *PersonIndex::find(const std::string &id) const {
  for (const auto &r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

PersonRecord *PersonIndex::find(const std::string &id) {
  return const_cast<PersonRecord *>(std::as_const(*this).find(id));
}

NameParts parse_person_name(std::string_view surface) {
  std::string text = trim(surface);
  NameParts parts;
  std::size_t comma = text.find(',');
  if (comma != std::string::npos) {
    std::string last = trim(std::string_view(text).substr(0, comma));
    std::string first = trim(std::string_view(text).substr(comma + 1));
    if (!last.empty()) {
      parts.last = last;
      if (!first.empty()) parts.first = first;
      return parts;
    }
    text = first;
  }
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) tokens.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  if (tokens.empty()) return parts;
  parts.last = tokens.back();
  if (tokens.size() > 1) {
    std::string first = tokens[0];
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) first += " " + tokens[i];
    parts.first = first;
  }
  return parts;
}

PersonIndex person_extract(const Corpus &corpus, const Selection &selection) {
  std::vector<Candidate> named;
  std::vector<Candidate> bare;
  std::size_t order = 0;
  for (const SelectedCell &sel : corpus.select(selection)) {
    if (!sel.cell->is_text()) continue;
    for (Candidate &c : detect(*sel.cell, order)) {
      (c.name.first ? named : bare).push_back(std::move(c));
    }
  }

  struct Building {
    PersonRecord record;
    std::size_t first_order;
  };
  std::vector<Building> records;

  for (const Candidate &c : named) {
    auto it = std::find_if(records.begin(), records.end(), [&](const Building &b) {
      return same_last(b.record.last_name, c.name.last) && b.record.first_name &&
             compatible_first(*b.record.first_name, *c.name.first);
    });
    if (it == records.end()) {
      Building b{{}, c.order};
      b.record.first_name = c.name.first;
      b.record.last_name = c.name.last;
      b.record.mentions.push_back(c.mention);
      records.push_back(std::move(b));
      continue;
    }
    keep_longer_first(it->record, c.name.first);
    add_mention(it->record, c.mention);
    it->first_order = std::min(it->first_order, c.order);
  }

  for (const Candidate &c : bare) {
    auto bare_it = std::find_if(records.begin(), records.end(), [&](const Building &b) {
      return !b.record.first_name && same_last(b.record.last_name, c.name.last);
    });
    Building *target = bare_it == records.end() ? nullptr : &*bare_it;
    bool review = false;
    if (!target) {
      std::vector<Building *> candidates;
      for (auto &b : records) {
        if (b.record.first_name && same_last(b.record.last_name, c.name.last)) candidates.push_back(&b);
      }
      if (candidates.size() == 1) {
        target = candidates[0];
      } else if (candidates.size() > 1) {
        std::stable_sort(candidates.begin(), candidates.end(), [](Building *a, Building *b) {
          return a->record.mentions.size() > b->record.mentions.size();
        });
        if (candidates[0]->record.mentions.size() > candidates[1]->record.mentions.size()) {
          target = candidates[0];
        } else {
          review = true;
        }
      }
    }
    if (!target) {
      Building b{{}, c.order};
      b.record.last_name = c.name.last;
      b.record.needs_review = review;
      records.push_back(std::move(b));
      target = &records.back();
    }
    add_mention(target->record, c.mention);
    target->first_order = std::min(target->first_order, c.order);
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const Building &a, const Building &b) { return a.first_order < b.first_order; });
  PersonIndex index;
  for (auto &b : records) {
    std::sort(b.record.mentions.begin(), b.record.mentions.end(),
              [](const PersonMention &x, const PersonMention &y) { return x.ref < y.ref; });
    b.record.id = "p" + std::to_string(index.next_id++);
    index.records.push_back(std::move(b.record));
  }
  return index;
}

void apply_person_edit(const Corpus &corpus, PersonIndex &index, const PersonEdit &edit) {
  PersonRecord *record = index.find(edit.person);
  if (!record) throw Error(ErrorCode::kEdit, "unknown person '" + edit.person + "'", "person");

  switch (edit.kind) {
    case PersonEditKind::kSwapNames:
      if (!record->first_name || trim(*record->first_name).empty()) {
        throw Error(ErrorCode::kEdit, "swap would leave " + edit.person + " without a last name",
                    "person");
      }
      std::swap(*record->first_name, record->last_name);
      break;
    case PersonEditKind::kMerge: {
      PersonRecord *other = index.find(edit.other);
      if (!other) throw Error(ErrorCode::kEdit, "unknown person '" + edit.other + "'", "other");
      if (other == record) throw Error(ErrorCode::kEdit, "cannot merge a person into itself", "other");
      for (const auto &m : other->mentions) add_mention(*record, m);
      record->needs_review = false;
      std::string gone = other->id;
      std::erase_if(index.records, [&](const PersonRecord &r) { return r.id == gone; });
      break;
    }
    case PersonEditKind::kAddMention: {
      if (!edit.ref) throw Error(ErrorCode::kEdit, "add_mention needs a cell", "ref");
      const Cell *cell = corpus.find_cell(*edit.ref);
      if (!cell || !cell->is_text()) {
        throw Error(ErrorCode::kEdit, to_string(*edit.ref) + " is not a text cell", "ref");
      }
      std::string surface = trim(edit.surface);
      std::size_t at = surface.empty() ? std::string::npos : cell->text().find(surface);
      if (at == std::string::npos) {
        throw Error(ErrorCode::kEdit, "'" + edit.surface + "' does not occur in " + to_string(*edit.ref),
                    "surface");
      }
      add_mention(*record, {*edit.ref, surface, span_struck(*cell, at, at + surface.size()), ""});
      break;
    }
    case PersonEditKind::kRemoveMention: {
      if (!edit.ref) throw Error(ErrorCode::kEdit, "remove_mention needs a cell", "ref");
      auto removed = std::erase_if(record->mentions, [&](const PersonMention &m) {
        return m.ref == *edit.ref && (edit.surface.empty() || m.surface == edit.surface);
      });
      if (removed == 0) {
        throw Error(ErrorCode::kEdit, edit.person + " has no mention in " + to_string(*edit.ref), "ref");
      }
      break;
    }
    case PersonEditKind::kRemovePerson: {
      std::string gone = record->id;
      std::erase_if(index.records, [&](const PersonRecord &r) { return r.id == gone; });
      break;
    }
  }
  merge_duplicates(index);
}

}  // namespace sheetgraph
