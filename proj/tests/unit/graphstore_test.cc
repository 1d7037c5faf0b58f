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


#include <gtest/gtest.h>

#include "sheetgraph/error.h"
#include "sheetgraph/graph.h"
#include "sheetgraph/uri.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph {
namespace {

Resource r(const std::string &local) { return Resource("http://example.org/" + local); }

Graph sample() {
  Graph g;
  g.add({r("a"), r("p"), r("b")});
  g.add({r("a"), r("p"), Literal::string("x")});
  g.add({r("a"), r("q"), Literal("2010-05-15", Datatype::kDate)});
  g.add({r("b"), r("p"), r("a")});
  g.add({r("c"), r("q"), Literal("-7", Datatype::kInteger)});
  return g;
}

TEST(GraphTest, SetSemantics) {
  Graph g = sample();
  EXPECT_EQ(g.size(), 5u);
  EXPECT_FALSE(g.add({r("a"), r("p"), r("b")}));
  EXPECT_TRUE(g.remove({r("a"), r("p"), r("b")}));
  EXPECT_FALSE(g.remove({r("a"), r("p"), r("b")}));
  EXPECT_EQ(g.size(), 4u);
}

// Every pattern shape against a brute-force filter.
TEST(GraphTest, PatternsAgreeWithScan) {
  Graph g = sample();
  std::vector<std::optional<Resource>> subjects = {std::nullopt, r("a"), r("b"), r("z")};
  std::vector<std::optional<Resource>> predicates = {std::nullopt, r("p"), r("q")};
  std::vector<std::optional<Term>> objects = {std::nullopt, Term(r("a")), Term(r("b")),
                                              Term(Literal::string("x"))};
  for (const auto &s : subjects)
    for (const auto &p : predicates)
      for (const auto &o : objects) {
        std::vector<Triple> want;
        for (const Triple &t : g.triples())
          if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) want.push_back(t);
        Pattern pattern{s, p, o};
        EXPECT_EQ(g.query(pattern), want);
        EXPECT_EQ(g.count(pattern), want.size());
      }
}

TEST(GraphTest, NTriplesAreSortedAndRoundTrip) {
  Graph g = sample();
  std::string nt = serialize(g, RdfFormat::kNTriples);
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t nl; (nl = nt.find('\n', start)) != std::string::npos; start = nl + 1)
    lines.push_back(nt.substr(start, nl - start));
  EXPECT_EQ(lines.size(), 5u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(parse_rdf(nt, RdfFormat::kNTriples), g);
  EXPECT_EQ(serialize(Graph(), RdfFormat::kNTriples), "");
}

TEST(GraphTest, TurtleRoundTripWithEscapes) {
  Graph g = sample();
  g.add({r("d"), vocab::rdfs_label(), Literal::string("quote \" back \\ nl \n tab \t é")});
  g.add({r("d"), vocab::rdf_type(), vocab::person_class()});
  std::string ttl = serialize(g, RdfFormat::kTurtle);
  EXPECT_NE(ttl.find("@prefix sg: <http://example.org/sheetgraph/vocab#>"), std::string::npos);
  EXPECT_EQ(parse_rdf(ttl, RdfFormat::kTurtle), g);
}

TEST(GraphTest, NTriplesLineForm) {
  Triple t{r("a"), r("p"), Literal("2010-05-15", Datatype::kDate)};
  EXPECT_EQ(ntriples_line(t),
            "<http://example.org/a> <http://example.org/p> "
            "\"2010-05-15\"^^<http://www.w3.org/2001/XMLSchema#date> .");
}

TEST(GraphTest, ParseErrorsCarryLine) {
  std::string doc = "<http://e.org/a> <http://e.org/p> <http://e.org/b> .\n_:b0 <http://e.org/p> \"x\" .\n";
  try {
    parse_rdf(doc, RdfFormat::kNTriples);
    FAIL();
  } catch (const ParseError &e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_EQ(*e.line(), 2u);
  }
  EXPECT_THROW(parse_rdf("<http://e.org/a> <http://e.org/p> \"x\"@en .\n", RdfFormat::kNTriples), ParseError);
  EXPECT_THROW(parse_rdf("@prefix x: <http://e.org/> .\nx:a x:p ", RdfFormat::kTurtle), ParseError);
}

TEST(RdfTest, LiteralValidation) {
  EXPECT_TRUE(valid_lexical("2016-02-29", Datatype::kDate));
  EXPECT_FALSE(valid_lexical("2015-02-29", Datatype::kDate));
  EXPECT_FALSE(valid_lexical("2015-13-01", Datatype::kDate));
  EXPECT_THROW(Literal("abc", Datatype::kInteger), Error);
  EXPECT_EQ(coerce_literal(" 42 ", Datatype::kInteger)->lexical(), "42");
  EXPECT_EQ(coerce_literal("TRUE", Datatype::kBoolean)->lexical(), "true");
  EXPECT_EQ(coerce_literal("0", Datatype::kBoolean)->lexical(), "false");
  EXPECT_FALSE(coerce_literal("1.5x", Datatype::kDecimal).has_value());
  EXPECT_THROW(Resource("not a uri"), Error);
}

TEST(RdfTest, GraphAndFormatNames) {
  EXPECT_EQ(parse_graph_name("knowledge"), GraphName::kKnowledge);
  EXPECT_EQ(graph_name(GraphName::kMatching), "matching");
  EXPECT_THROW(parse_graph_name("other"), Error);
  EXPECT_EQ(parse_rdf_format("ttl"), RdfFormat::kTurtle);
  EXPECT_EQ(parse_rdf_format("nt"), RdfFormat::kNTriples);
  EXPECT_EQ(rdf_media_type(RdfFormat::kTurtle), "text/turtle");
}

TEST(VocabularyTest, StruckVariantsPair) {
  EXPECT_EQ(vocab::struck_variant(vocab::matches()), vocab::matches_struck());
  EXPECT_EQ(vocab::struck_variant(vocab::mentions_person()), vocab::mentions_person_struck());
  EXPECT_EQ(vocab::mentions_person_struck().uri(), "http://example.org/sheetgraph/vocab#mentionsPersonStruck");
  Resource custom = r("published");
  EXPECT_EQ(vocab::struck_variant(custom).uri(), "http://example.org/publishedStruck");
  EXPECT_TRUE(vocab::is_struck_variant(vocab::struck_variant(custom)));
  EXPECT_EQ(vocab::normal_variant(vocab::struck_variant(custom)), custom);
  EXPECT_EQ(vocab::normal_variant(custom), custom);
  EXPECT_EQ(vocab::route(custom, false), custom);
}

TEST(VocabularyTest, MintingIsPureAndNormalized) {
  Minter m("http://example.org/p/");
  EXPECT_EQ(m.mint_resource("Department", "GA/BZ").uri(), "http://example.org/p/resource/Department/GA%2FBZ");
  EXPECT_EQ(m.mint_resource("Person", "  Emma   Thomas "), m.mint_resource("Person", "Emma Thomas"));
  EXPECT_EQ(m.term("hasAttachment").uri(), "http://example.org/p/ontology/hasAttachment");
  EXPECT_THROW(m.mint_resource("Person", "   "), Error);
  EXPECT_EQ(local_name("http://example.org/p/ontology/Document"), "Document");
  EXPECT_EQ(local_name("http://example.org/sheetgraph/vocab#matches"), "matches");
}

TEST(UriTest, PercentCoding) {
  EXPECT_EQ(percent_encode("a b/ü~"), "a%20b%2F%C3%BC~");
  EXPECT_EQ(percent_decode("a%20b%2F%C3%BC~"), "a b/ü~");
  EXPECT_FALSE(percent_decode("%2").has_value());
  EXPECT_FALSE(percent_decode("%zz").has_value());
  EXPECT_EQ(slug("  x \n y "), "x%20y");
}

}  // namespace
}  // namespace sheetgraph
