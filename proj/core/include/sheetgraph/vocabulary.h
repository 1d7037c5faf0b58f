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

// Predicates used in the matching graph and the knowledge graph, plus
// project-scoped resource minting.
//
// Every annotation predicate has a struck variant: a statement derived
// from struck-out cell text is asserted with the variant instead of the
// normal predicate. Built-in predicates pair explicitly (matches /
// matchesStruck); user-chosen properties get "<uri>Struck".

#ifndef SHEETGRAPH_VOCABULARY_H_
#define SHEETGRAPH_VOCABULARY_H_

#include <string>
#include <string_view>

#include "sheetgraph/rdf.h"

namespace sheetgraph {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kVocab = "http://example.org/sheetgraph/vocab#";
}  // namespace ns

namespace vocab {

// Annotation predicates (matching graph).
const Resource &matches();
const Resource &matches_struck();
const Resource &remainder_comment();
const Resource &remainder_comment_struck();
const Resource &mentions_person();
const Resource &mentions_person_struck();
const Resource &has_literal();
const Resource &has_literal_struck();
const Resource &type_hint();
const Resource &type_hint_struck();
const Resource &related_cell();
const Resource &related_cell_struck();

// Knowledge-graph predicates and classes.
const Resource &rdf_type();
const Resource &rdfs_label();
const Resource &rdfs_comment();
const Resource &rdfs_subclass_of();
const Resource &alt_label();
const Resource &first_name();
const Resource &last_name();
const Resource &person_class();

// Struck variant of an annotation predicate; idempotent on variants.
Resource struck_variant(const Resource &predicate);
bool is_struck_variant(const Resource &predicate);
// Inverse of struck_variant; identity on normal predicates.
Resource normal_variant(const Resource &predicate);

inline Resource route(const Resource &predicate, bool struck) {
  return struck ? struck_variant(predicate) : predicate;
}

}  // namespace vocab

// Stable, counter-free URIs under a project base:
//   resource:  <base>resource/<slug(kind)>/<slug(label)>
//   term:      <base>ontology/<local>
class Minter {
 public:
  explicit Minter(std::string base_uri);

  const std::string &base_uri() const { return base_; }

  // Pure function of (base, kind, normalized label). Throws kParameter for
  // blank labels or kinds.
  Resource mint_resource(std::string_view kind, std::string_view preferred_label) const;
  Resource term(std::string_view local) const;

 private:
  std::string base_;
};

// Last path or fragment segment of a URI ("Department" for .../Department).
std::string local_name(std::string_view uri);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_VOCABULARY_H_
