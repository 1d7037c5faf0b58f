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

#ifndef SHEETGRAPH_SRC_RDF_TEXT_H_
#define SHEETGRAPH_SRC_RDF_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

#include "sheetgraph/graph.h"

namespace sheetgraph::internal {

// Body of a double-quoted literal with N-Triples escapes applied.
std::string escape_string(std::string_view text);
std::string ntriples_term(const Term &term);

std::string serialize_turtle(const Graph &graph, const std::vector<PrefixBinding> &prefixes);
Graph parse_turtle_family(std::string_view document, bool ntriples_only);

}  // namespace sheetgraph::internal

#endif  // SHEETGRAPH_SRC_RDF_TEXT_H_
