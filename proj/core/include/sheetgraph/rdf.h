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

// RDF atoms. There are no blank nodes: every node is an IRI or a literal.

#ifndef SHEETGRAPH_RDF_H_
#define SHEETGRAPH_RDF_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sheetgraph {

class Resource {
 public:
  Resource() = default;
  // Throws kParameter unless uri is absolute and IRI-safe.
  explicit Resource(std::string uri);

  const std::string &uri() const { return uri_; }

  auto operator<=>(const Resource &) const = default;
  bool operator==(const Resource &) const = default;

 private:
  std::string uri_;
};

enum class Datatype { kString, kInteger, kDecimal, kBoolean, kDate };

std::string_view datatype_name(Datatype type);  // "string", "integer", ...
std::optional<Datatype> datatype_from_name(std::string_view name);
const std::string &datatype_uri(Datatype type);  // xsd IRI
std::optional<Datatype> datatype_from_uri(std::string_view uri);

// True if lexical is a valid lexical form for the datatype. Dates must be
// ISO-8601 YYYY-MM-DD naming a real calendar day.
bool valid_lexical(std::string_view lexical, Datatype type);

class Literal {
 public:
  Literal() = default;
  // Throws kParameter if the lexical form is invalid for the datatype.
  Literal(std::string lexical, Datatype type);

  static Literal string(std::string lexical) { return Literal(std::move(lexical), Datatype::kString); }

  const std::string &lexical() const { return lexical_; }
  Datatype datatype() const { return datatype_; }

  auto operator<=>(const Literal &) const = default;
  bool operator==(const Literal &) const = default;

 private:
  std::string lexical_;
  Datatype datatype_ = Datatype::kString;
};

using Term = std::variant<Resource, Literal>;

struct Triple {
  Resource subject;
  Resource predicate;
  Term object;

  auto operator<=>(const Triple &) const = default;
  bool operator==(const Triple &) const = default;
};

inline const Resource *as_resource(const Term &term) { return std::get_if<Resource>(&term); }
inline const Literal *as_literal(const Term &term) { return std::get_if<Literal>(&term); }

// Trims surrounding whitespace and validates against the datatype. Booleans
// accept true/false/1/0 (any case) and are stored as true/false. nullopt
// when the text does not fit.
std::optional<Literal> coerce_literal(std::string_view text, Datatype type);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_RDF_H_
