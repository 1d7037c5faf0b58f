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

#include "scripts.h"
#include "sheetgraph/collector.h"
#include "sheetgraph/error.h"
#include "sheetgraph/session.h"
#include "xlsx_writer.h"

namespace sheetgraph::testing {
namespace {

class FixtureCollectTest : public ::testing::Test {
 protected:
  FixtureCollectTest() : run_(run_fixture_session()), terms_(run_.session->base_uri()) {}

  Session &session() { return *run_.session; }
  std::string instance(std::uint32_t row, const std::string &id_slug) const {
    return run_.session->base_uri() + "instance/" + run_.workbook_id + "/Sheet1/R" + std::to_string(row) + "-" +
           id_slug;
  }
  CollectorConfig config() const {
    CollectorConfig c;
    c.workbook_id = run_.workbook_id;
    c.sheet = kFixtureSheet;
    c.default_type = terms_.document;
    c.instance_id_property = terms_.document_id;
    return c;
  }

  FixtureRun run_;
  Terms terms_;
};

TEST_F(FixtureCollectTest, OneInstancePerAnnotatedRow) {
  const InstanceReport &report = run_.collected.report;
  ASSERT_EQ(report.instances.size(), 4u);
  EXPECT_TRUE(report.skipped.empty());
  EXPECT_EQ(report.instances[0].instance.uri(), instance(0, "AB-ztad.63%2F23"));
  EXPECT_EQ(report.instances[2].instance.uri(), instance(2, "AB-hzyx-78%2F24%20A1"));
  EXPECT_EQ(report.instances[2].types, std::vector<Resource>{terms_.attachment});
  EXPECT_EQ(report.instances[1].types, std::vector<Resource>{terms_.document});
}

TEST_F(FixtureCollectTest, AnnotationsAreCopiedWithRenames) {
  Resource r0(instance(0, "AB-ztad.63%2F23"));
  Resource r3(instance(3, "AB%205-pbga.67"));
  EXPECT_TRUE(session().count(GraphName::kKnowledge, {r0, vocab::rdfs_comment(), Term(Literal::string("*"))}));
  EXPECT_TRUE(session().count(GraphName::kKnowledge, {r3, vocab::rdfs_comment(), Term(Literal::string("(new)"))}));
  EXPECT_TRUE(session().count(GraphName::kKnowledge,
                              {r0, vocab::rdfs_label(), Term(Literal::string("AB-ztad.63/23"))}));
  EXPECT_TRUE(session().count(GraphName::kKnowledge, {r0, terms_.sent, Term(terms_.sent_flag)}));
  EXPECT_EQ(session().count(GraphName::kKnowledge, {r0, vocab::mentions_person_struck(), std::nullopt}), 1u);
  EXPECT_EQ(session().count(GraphName::kKnowledge, {std::nullopt, vocab::type_hint(), std::nullopt}), 0u);
  EXPECT_EQ(session().count(GraphName::kKnowledge, {std::nullopt, vocab::related_cell(), std::nullopt}), 0u);
}

TEST_F(FixtureCollectTest, LiftLinksDocumentToAttachment) {
  EXPECT_EQ(run_.lifted.report.added, 1u);
  EXPECT_TRUE(run_.lifted.report.skipped.empty());
  Resource r1(instance(1, "AB-hzyx-78%2F24"));
  Resource r2(instance(2, "AB-hzyx-78%2F24%20A1"));
  EXPECT_EQ(session().count(GraphName::kKnowledge, {r1, terms_.has_attachment, Term(r2)}), 1u);
  // lifting again adds nothing
  EXPECT_EQ(session().lift(terms_.has_attachment).report.added, 0u);
}

TEST_F(FixtureCollectTest, OverlapNeedsRerun) {
  try {
    session().collect(config());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kCollectionOverlap);
    EXPECT_EQ(e.parameter(), "rerun");
  }
  std::size_t before = session().size(GraphName::kKnowledge);
  CollectOutcome again = session().collect(config(), true);
  EXPECT_EQ(again.report.instances.size(), 4u);
  // the earlier collection is undone, its lifted link stays in place
  EXPECT_EQ(session().size(GraphName::kKnowledge), before);
  EXPECT_EQ(session().last_instance_report()->instances.size(), 4u);
}

TEST_F(FixtureCollectTest, DisjointRangesDoNotOverlap) {
  Session s;
  std::string wb = s.load_workbook(read_bytes(data_path("table1.xlsx")), WorkbookFormat::kXlsx);
  s.commit(s.run({column_selection(wb, kFixtureSheet, kDocId, 0, 3), document_id_params(terms_)}).staging_id);
  s.commit(s.run({column_selection(wb, kFixtureSheet, kDocId, 0, 3), attachment_relationship_params()}).staging_id);
  CollectorConfig c = config();
  c.workbook_id = wb;
  c.last_row = 1;
  EXPECT_EQ(s.collect(c).report.instances.size(), 2u);
  LiftOutcome lifted = s.lift(terms_.has_attachment);
  EXPECT_EQ(lifted.report.added, 0u);
  ASSERT_EQ(lifted.report.skipped.size(), 1u);
  EXPECT_EQ(lifted.report.skipped[0].b.row, 2u);

  c.first_row = 2;
  c.last_row.reset();
  EXPECT_EQ(s.collect(c).report.instances.size(), 2u);
  EXPECT_EQ(s.lift(terms_.has_attachment).report.added, 1u);
}

TEST_F(FixtureCollectTest, RequiredPropertiesSkipRows) {
  CollectorConfig c = config();
  c.required_properties = {terms_.sent};
  EXPECT_THROW(collect_instances(Corpus(session().base_uri()), Dataset{}, c), Error);

  Corpus corpus(session().base_uri());
  corpus.add(session().workbook(run_.workbook_id));
  CollectionResult result = collect_instances(corpus, session().dataset(), c);
  ASSERT_EQ(result.report.instances.size(), 1u);
  EXPECT_EQ(result.report.instances[0].row, 0u);
  ASSERT_EQ(result.report.skipped.size(), 3u);
  EXPECT_NE(result.report.skipped[0].reason.find("ontology/sent"), std::string::npos);
}

TEST(CollectorTest, StruckRelationshipLiftsToStruckPredicate) {
  Session s;
  Terms t(s.base_uri());
  SheetSpec sheet{"S",
                  {CellSpec::text(0, 0, "K-1"), CellSpec::rich(1, 0, {{"K-1 A1", true}}),
                   CellSpec::text(2, 0, "K-2 A1")}};
  std::string wb = s.load_workbook(write_xlsx({sheet}), WorkbookFormat::kXlsx);
  Selection sel = column_selection(wb, "S", 0, 0, 2);
  RegexParams ids;
  ids.pattern = "^(K-\\d+(?: A\\d+)?)$";
  ids.group = 1;
  ids.property = t.document_id;
  s.commit(s.run({sel, ids}).staging_id);
  s.commit(s.run({sel, RelationshipParams{"^(K-\\d+)$", "A\\d+$", JoinCondition::kPrefix}}).staging_id);
  EXPECT_EQ(s.count(GraphName::kMatching, {std::nullopt, vocab::related_cell_struck(), std::nullopt}), 1u);

  CollectorConfig c;
  c.workbook_id = wb;
  c.sheet = "S";
  c.default_type = t.document;
  c.required_properties = {t.document_id};
  c.instance_id_property = t.document_id;
  CollectOutcome collected = s.collect(c);
  // the struck id only carries documentIdStruck
  EXPECT_EQ(collected.report.instances.size(), 2u);
  ASSERT_EQ(collected.report.skipped.size(), 1u);
  EXPECT_EQ(collected.report.skipped[0].row, 1u);

  c.required_properties.clear();
  s.collect(c, true);
  LiftOutcome lifted = s.lift(t.has_attachment);
  EXPECT_EQ(lifted.report.added, 1u);
  EXPECT_EQ(s.count(GraphName::kKnowledge, {std::nullopt, vocab::struck_variant(t.has_attachment), std::nullopt}),
            1u);
  EXPECT_EQ(s.count(GraphName::kKnowledge, {std::nullopt, t.has_attachment, std::nullopt}), 0u);
}

TEST(CollectorTest, TypeHintOverridesDefaultAndRowsWithoutIdKeepBareUri) {
  Session s;
  Terms t(s.base_uri());
  SheetSpec sheet{"S", {CellSpec::text(0, 0, "GA"), CellSpec::text(1, 0, "BZ"), CellSpec::text(1, 1, "memo")}};
  std::string wb = s.load_workbook(write_xlsx({sheet}), WorkbookFormat::kXlsx);
  s.commit(s.run({column_selection(wb, "S", 0, 0, 1), department_params(t)}).staging_id);
  RegexParams memo;
  memo.pattern = "memo";
  memo.mode = RegexMode::kConstant;
  memo.constant = t.sent_flag;
  s.commit(s.run({{{{wb, "S", 1, 1}}}, memo}).staging_id);

  CollectorConfig c;
  c.workbook_id = wb;
  c.sheet = "S";
  c.default_type = t.document;
  CollectOutcome out = s.collect(c);
  ASSERT_EQ(out.report.instances.size(), 2u);
  EXPECT_EQ(out.report.instances[0].instance.uri(), s.base_uri() + "instance/" + wb + "/S/R0");
  EXPECT_EQ(out.report.instances[0].types, std::vector<Resource>{t.document});
  EXPECT_EQ(out.report.instances[1].types, std::vector<Resource>{t.sent_flag});
  EXPECT_EQ(out.report.instances[1].property_count, 2u);
}

}  // namespace
}  // namespace sheetgraph::testing
