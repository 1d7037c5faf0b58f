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

#include <tuple>

#include "sheetgraph/error.h"
#include "sheetgraph/graph.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {
namespace {

// Smallest possible term: Resource sorts before Literal, "" before all.
const Term &min_term() {
  static const Term kMin = Resource();
  return kMin;
}

bool matches(const Pattern &p, const Triple &t) {
  return (!p.subject || *p.subject == t.subject) && (!p.predicate || *p.predicate == t.predicate) &&
         (!p.object || *p.object == t.object);
}

}  // namespace

bool Graph::PosLess::operator()(const Triple &a, const Triple &b) const {
  return std::tie(a.predicate, a.object, a.subject) < std::tie(b.predicate, b.object, b.subject);
}

bool Graph::OspLess::operator()(const Triple &a, const Triple &b) const {
  return std::tie(a.object, a.subject, a.predicate) < std::tie(b.object, b.subject, b.predicate);
}

bool Graph::add(const Triple &triple) {
  if (!spo_.insert(triple).second) return false;
  pos_.insert(triple);
  osp_.insert(triple);
  return true;
}

bool Graph::remove(const Triple &triple) {
  if (spo_.erase(triple) == 0) return false;
  pos_.erase(triple);
  osp_.erase(triple);
  return true;
}

void Graph::clear() {
  spo_.clear();
  pos_.clear();
  osp_.clear();
}

std::vector<Triple> Graph::query(const Pattern &pattern) const {
  std::vector<Triple> out;
  if (pattern.subject) {
    Triple probe{*pattern.subject, pattern.predicate.value_or(Resource()), min_term()};
    for (auto it = spo_.lower_bound(probe); it != spo_.end() && it->subject == *pattern.subject; ++it) {
      if (pattern.predicate && it->predicate != *pattern.predicate) break;
      if (matches(pattern, *it)) out.push_back(*it);
    }
    return out;
  }
  if (pattern.predicate) {
    Triple probe{Resource(), *pattern.predicate, pattern.object.value_or(min_term())};
    for (auto it = pos_.lower_bound(probe); it != pos_.end() && it->predicate == *pattern.predicate; ++it) {
      if (pattern.object && it->object != *pattern.object) break;
      out.push_back(*it);
    }
  } else if (pattern.object) {
    Triple probe{Resource(), Resource(), *pattern.object};
    for (auto it = osp_.lower_bound(probe); it != osp_.end() && it->object == *pattern.object; ++it) {
      out.push_back(*it);
    }
  } else {
    return {spo_.begin(), spo_.end()};
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::count(const Pattern &pattern) const {
  if (!pattern.subject && !pattern.predicate && !pattern.object) return spo_.size();
  return query(pattern).size();
}

std::string_view graph_name(GraphName name) {
  return name == GraphName::kMatching ? "matching" : "knowledge";
}

GraphName parse_graph_name(std::string_view name) {
  if (name == "matching") return GraphName::kMatching;
  if (name == "knowledge") return GraphName::kKnowledge;
  throw Error(ErrorCode::kParameter, "unknown graph '" + std::string(name) + "'", "graph");
}

RdfFormat parse_rdf_format(std::string_view tag) {
  if (tag == "turtle" || tag == "ttl") return RdfFormat::kTurtle;
  if (tag == "ntriples" || tag == "nt" || tag == "n-triples") return RdfFormat::kNTriples;
  throw Error(ErrorCode::kParameter, "unknown RDF format '" + std::string(tag) + "'", "format");
}

std::string_view rdf_format_tag(RdfFormat format) {
  return format == RdfFormat::kTurtle ? "turtle" : "ntriples";
}

std::string_view rdf_media_type(RdfFormat format) {
  return format == RdfFormat::kTurtle ? "text/turtle" : "application/n-triples";
}

std::vector<PrefixBinding> standard_prefixes() {
  return {{"rdf", std::string(ns::kRdf)},
          {"rdfs", std::string(ns::kRdfs)},
          {"xsd", std::string(ns::kXsd)},
          {"skos", std::string(ns::kSkos)},
          {"sg", std::string(ns::kVocab)}};
}

}  // namespace sheetgraph
