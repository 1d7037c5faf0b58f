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

#ifndef SHEETGRAPH_GRAPH_H_
#define SHEETGRAPH_GRAPH_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sheetgraph/rdf.h"

namespace sheetgraph {

// Triple pattern; unset positions are wildcards.
struct Pattern {
  std::optional<Resource> subject;
  std::optional<Resource> predicate;
  std::optional<Term> object;
};

// A set of triples with SPO, POS and OSP orderings so any pattern with at
// least one bound position is answered by a range scan.
class Graph {
 public:
  bool add(const Triple &triple);
  bool remove(const Triple &triple);
  bool contains(const Triple &triple) const { return spo_.count(triple) != 0; }

  // Matches in SPO order.
  std::vector<Triple> query(const Pattern &pattern) const;
  std::size_t count(const Pattern &pattern) const;

  const std::set<Triple> &triples() const { return spo_; }
  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  void clear();

  bool operator==(const Graph &other) const { return spo_ == other.spo_; }

 private:
  struct PosLess {
    bool operator()(const Triple &a, const Triple &b) const;
  };
  struct OspLess {
    bool operator()(const Triple &a, const Triple &b) const;
  };

  std::set<Triple> spo_;
  std::set<Triple, PosLess> pos_;
  std::set<Triple, OspLess> osp_;
};

enum class GraphName { kMatching, kKnowledge };

std::string_view graph_name(GraphName name);  // "matching" / "knowledge"
GraphName parse_graph_name(std::string_view name);  // throws kParameter

// The two graphs of a project: cell annotations (subjects are deep links)
// and the knowledge graph built from them.
struct Dataset {
  Graph matching;
  Graph knowledge;

  Graph &operator[](GraphName name) { return name == GraphName::kMatching ? matching : knowledge; }
  const Graph &operator[](GraphName name) const {
    return name == GraphName::kMatching ? matching : knowledge;
  }
};

enum class RdfFormat { kTurtle, kNTriples };

RdfFormat parse_rdf_format(std::string_view tag);  // "turtle"/"ttl", "ntriples"/"nt"
std::string_view rdf_format_tag(RdfFormat format);
std::string_view rdf_media_type(RdfFormat format);

struct PrefixBinding {
  std::string prefix;
  std::string ns;
};

// rdf, rdfs, xsd, skos and the annotation vocabulary.
std::vector<PrefixBinding> standard_prefixes();

// N-Triples: one triple per line, lines sorted bytewise, empty document for
// an empty graph. Turtle: prefix block, then one subject block per subject
// in SPO order.
std::string serialize(const Graph &graph, RdfFormat format,
                      const std::vector<PrefixBinding> &extra_prefixes = {});

// Parses a document back into a graph. Throws ParseError (with line and
// byte offset) on syntax errors, blank nodes, language tags or datatypes
// outside the supported set.
Graph parse_rdf(std::string_view document, RdfFormat format);

// Single-triple N-Triples line without the trailing newline.
std::string ntriples_line(const Triple &triple);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_GRAPH_H_
