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

#include "rdf_text.h"

namespace sheetgraph {
namespace internal {

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20 || ch == 0x7F) {
          static constexpr char kHex[] = "0123456789ABCDEF";
          auto c = static_cast<unsigned char>(ch);
          out += "\\u00";
          out += kHex[c >> 4];
          out += kHex[c & 0xF];
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string ntriples_term(const Term &term) {
  if (const Resource *r = as_resource(term)) return "<" + r->uri() + ">";
  const Literal &lit = std::get<Literal>(term);
  std::string out = "\"" + escape_string(lit.lexical()) + "\"";
  if (lit.datatype() != Datatype::kString) out += "^^<" + datatype_uri(lit.datatype()) + ">";
  return out;
}

}  // namespace internal

std::string ntriples_line(const Triple &triple) {
  return "<" + triple.subject.uri() + "> <" + triple.predicate.uri() + "> " +
         internal::ntriples_term(triple.object) + " .";
}

std::string serialize(const Graph &graph, RdfFormat format,
                      const std::vector<PrefixBinding> &extra_prefixes) {
  if (format == RdfFormat::kTurtle) {
    std::vector<PrefixBinding> prefixes = standard_prefixes();
    prefixes.insert(prefixes.end(), extra_prefixes.begin(), extra_prefixes.end());
    return internal::serialize_turtle(graph, prefixes);
  }
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const Triple &t : graph.triples()) lines.push_back(ntriples_line(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto &line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

Graph parse_rdf(std::string_view document, RdfFormat format) {
  return internal::parse_turtle_family(document, format == RdfFormat::kNTriples);
}

}  // namespace sheetgraph
