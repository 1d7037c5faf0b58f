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

#include "sheetgraph/vocabulary.h"

#include <map>

#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {
namespace vocab {
namespace {

Resource make(std::string_view ns, std::string_view local) {
  return Resource(std::string(ns) + std::string(local));
}

constexpr std::string_view kStruckSuffix = "Struck";

}  // namespace

#define SHEETGRAPH_TERM(fn, ns_, local)        \
  const Resource &fn() {                       \
    static const Resource kTerm = make(ns_, local); \
    return kTerm;                              \
  }

SHEETGRAPH_TERM(matches, ns::kVocab, "matches")
SHEETGRAPH_TERM(matches_struck, ns::kVocab, "matchesStruck")
SHEETGRAPH_TERM(remainder_comment, ns::kVocab, "remainderComment")
SHEETGRAPH_TERM(remainder_comment_struck, ns::kVocab, "remainderCommentStruck")
SHEETGRAPH_TERM(mentions_person, ns::kVocab, "mentionsPerson")
SHEETGRAPH_TERM(mentions_person_struck, ns::kVocab, "mentionsPersonStruck")
SHEETGRAPH_TERM(has_literal, ns::kVocab, "hasLiteral")
SHEETGRAPH_TERM(has_literal_struck, ns::kVocab, "hasLiteralStruck")
SHEETGRAPH_TERM(type_hint, ns::kVocab, "typeHint")
SHEETGRAPH_TERM(type_hint_struck, ns::kVocab, "typeHintStruck")
SHEETGRAPH_TERM(related_cell, ns::kVocab, "relatedCell")
SHEETGRAPH_TERM(related_cell_struck, ns::kVocab, "relatedCellStruck")
SHEETGRAPH_TERM(first_name, ns::kVocab, "firstName")
SHEETGRAPH_TERM(last_name, ns::kVocab, "lastName")
SHEETGRAPH_TERM(person_class, ns::kVocab, "Person")
SHEETGRAPH_TERM(rdf_type, ns::kRdf, "type")
SHEETGRAPH_TERM(rdfs_label, ns::kRdfs, "label")
SHEETGRAPH_TERM(rdfs_comment, ns::kRdfs, "comment")
SHEETGRAPH_TERM(rdfs_subclass_of, ns::kRdfs, "subClassOf")
SHEETGRAPH_TERM(alt_label, ns::kSkos, "altLabel")

#undef SHEETGRAPH_TERM

// Built-in annotation predicates follow the same "<uri>Struck" rule, so a
// single suffix convention covers both built-in and user properties.
Resource struck_variant(const Resource &predicate) {
  if (is_struck_variant(predicate)) return predicate;
  return Resource(predicate.uri() + std::string(kStruckSuffix));
}

bool is_struck_variant(const Resource &predicate) {
  return predicate.uri().ends_with(kStruckSuffix);
}

Resource normal_variant(const Resource &predicate) {
  if (!is_struck_variant(predicate)) return predicate;
  const std::string &uri = predicate.uri();
  return Resource(uri.substr(0, uri.size() - kStruckSuffix.size()));
}

}  // namespace vocab

Minter::Minter(std::string base_uri) : base_(std::move(base_uri)) {
  if (!is_absolute_uri(base_)) {
    throw Error(ErrorCode::kConfig, "project base URI must be absolute: " + base_, "base_uri");
  }
  if (!base_.ends_with('/') && !base_.ends_with('#')) base_ += '/';
}

Resource Minter::mint_resource(std::string_view kind, std::string_view preferred_label) const {
  std::string kind_slug = slug(kind);
  std::string label_slug = slug(preferred_label);
  if (kind_slug.empty()) throw Error(ErrorCode::kParameter, "resource kind is blank", "kind");
  if (label_slug.empty()) {
    throw Error(ErrorCode::kParameter, "preferred label is blank", "preferred_label");
  }
  return Resource(base_ + "resource/" + kind_slug + "/" + label_slug);
}

Resource Minter::term(std::string_view local) const {
  std::string local_slug = slug(local);
  if (local_slug.empty()) throw Error(ErrorCode::kParameter, "term name is blank", "term");
  return Resource(base_ + "ontology/" + local_slug);
}

std::string local_name(std::string_view uri) {
  auto cut = uri.find_last_of("/#");
  std::string_view local = cut == std::string_view::npos ? uri : uri.substr(cut + 1);
  auto decoded = percent_decode(local);
  return decoded ? *decoded : std::string(local);
}

}  // namespace sheetgraph
