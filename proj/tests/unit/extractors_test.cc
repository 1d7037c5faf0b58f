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

#include <cstdio>

#include "scripts.h"
#include "sheetgraph/error.h"
#include "sheetgraph/extractors.h"
#include "xlsx_writer.h"

namespace sheetgraph::testing {
namespace {

constexpr const char *kBase = "http://example.org/sheetgraph/project/default/";

class ExtractorsTest : public ::testing::Test {
 protected:
  ExtractorsTest() : corpus_(kBase), terms_(kBase) {
    wb_ = corpus_.add(load_workbook(read_bytes(data_path("table1.xlsx")), WorkbookFormat::kXlsx)).id();
  }
  Selection col(std::uint32_t c) const { return column_selection(wb_, kFixtureSheet, c, 0, 3); }
  CellRef at(std::uint32_t r, std::uint32_t c) const { return {wb_, kFixtureSheet, r, c}; }

  Corpus corpus_;
  Terms terms_;
  std::string wb_;
};

// Calendar oracle: counts forward one day at a time from the epoch.
std::string day_walk(int y, int m, int d, long n) {
  static const int kLen[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  auto len = [](int yy, int mm) {
    bool leap = (yy % 4 == 0 && yy % 100 != 0) || yy % 400 == 0;
    return mm == 2 && leap ? 29 : kLen[mm - 1];
  };
  for (; n > 0; --n) {
    if (++d > len(y, m)) {
      d = 1;
      if (++m > 12) {
        m = 1;
        ++y;
      }
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
  return buf;
}

TEST_F(ExtractorsTest, DepartmentStatisticsCollapseToThreeRows) {
  StatSummary s = descriptive_statistics(corpus_, col(kDep), department_params(terms_));
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[0].value, "GA");
  EXPECT_EQ(s.rows[0].count, 1u);
  EXPECT_EQ(s.rows[1].value, "GA/BZ");
  EXPECT_EQ(s.rows[1].count, 2u);
  EXPECT_EQ(s.rows[2].value, "BZ");
  EXPECT_EQ(s.rows[2].count, 1u);
  std::vector<Occurrence> want = {{at(1, kDep), false}, {at(2, kDep), false}};
  EXPECT_EQ(s.rows[1].occurrences, want);
  EXPECT_TRUE(s.misses.empty());
}

TEST_F(ExtractorsTest, StatisticsWithSplitCountOccurrences) {
  StatsParams p = department_params(terms_);
  p.transform = R"(split("/"))";
  StatSummary s = descriptive_statistics(corpus_, col(kDep), p);
  ASSERT_EQ(s.rows.size(), 2u);
  EXPECT_EQ(s.rows[0].value, "GA");
  EXPECT_EQ(s.rows[0].count, 3u);
  EXPECT_EQ(s.rows[1].value, "BZ");
  EXPECT_EQ(s.rows[1].count, 3u);
}

TEST_F(ExtractorsTest, StatisticsTrackStruckRuns) {
  StatSummary s = descriptive_statistics(corpus_, col(kEditor), StatsParams{});
  auto cooper = std::find_if(s.rows.begin(), s.rows.end(), [](const StatRow &r) { return r.value == "Cooper"; });
  ASSERT_NE(cooper, s.rows.end());
  ASSERT_EQ(cooper->occurrences.size(), 1u);
  EXPECT_TRUE(cooper->occurrences[0].struck);

  StatsParams visible;
  visible.include_struck = false;
  StatSummary v = descriptive_statistics(corpus_, col(kEditor), visible);
  EXPECT_TRUE(std::none_of(v.rows.begin(), v.rows.end(), [](const StatRow &r) { return r.value == "Cooper"; }));
}

TEST_F(ExtractorsTest, StatisticsSkipNumbersAndRejectEmptySelection) {
  StatSummary s = descriptive_statistics(corpus_, col(kLine), StatsParams{});
  EXPECT_TRUE(s.rows.empty());
  EXPECT_EQ(s.skipped.size(), 4u);
  EXPECT_THROW(descriptive_statistics(corpus_, Selection{}, StatsParams{}), Error);
  StatsParams bad;
  bad.transform = "split(";
  EXPECT_THROW(descriptive_statistics(corpus_, col(kDep), bad), Error);
}

TEST_F(ExtractorsTest, DocumentIdRegexKeepsRemainder) {
  RegexStaging s = regex_extract(corpus_, col(kDocId), document_id_params(terms_));
  ASSERT_EQ(s.matched.size(), 4u);
  EXPECT_TRUE(s.missed.empty());
  EXPECT_EQ(s.matched[0].extracted, "AB-ztad.63/23");
  EXPECT_EQ(s.matched[0].remainder, "*");
  EXPECT_EQ(s.matched[2].extracted, "AB-hzyx-78/24 A1");
  EXPECT_EQ(s.matched[3].extracted, "AB 5-pbga.67");
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(s.matched[i].remainder, "") << i;
  ASSERT_TRUE(s.matched[0].literal.has_value());
  EXPECT_EQ(s.matched[0].literal->lexical(), "AB-ztad.63/23");
}

TEST_F(ExtractorsTest, ConstantModeSplitsMatchedAndMissed) {
  RegexStaging s = regex_extract(corpus_, col(kSent), sent_params(terms_));
  ASSERT_EQ(s.matched.size(), 1u);
  EXPECT_EQ(s.matched[0].ref, at(0, kSent));
  ASSERT_EQ(s.missed.size(), 1u);
  EXPECT_EQ(s.missed[0].ref, at(3, kSent));
  EXPECT_EQ(s.params.effective_property(), terms_.sent);

  RegexParams hint = attachment_hint_params(terms_);
  EXPECT_EQ(hint.effective_property(), vocab::type_hint());
  RegexStaging h = regex_extract(corpus_, col(kDocId), hint);
  ASSERT_EQ(h.matched.size(), 1u);
  EXPECT_EQ(h.matched[0].ref.row, 2u);
}

TEST_F(ExtractorsTest, StruckSpanRoutesTheMatch) {
  RegexParams p;
  p.pattern = "Cooper|Smith";
  RegexStaging s = regex_extract(corpus_, {{at(0, kEditor)}}, p);
  ASSERT_EQ(s.matched.size(), 1u);
  EXPECT_EQ(s.matched[0].extracted, "Cooper");
  EXPECT_TRUE(s.matched[0].struck);
  EXPECT_EQ(s.matched[0].remainder, "Smith");
  EXPECT_FALSE(s.matched[0].remainder_struck);
}

TEST_F(ExtractorsTest, RegexParameterErrors) {
  RegexParams p;
  p.pattern = "(";
  EXPECT_THROW(regex_extract(corpus_, col(kDocId), p), Error);
  p.pattern = "(a)";
  p.group = 2;
  try {
    regex_extract(corpus_, col(kDocId), p);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kParameter);
    EXPECT_EQ(e.parameter(), "group");
  }
  RegexParams constant;
  constant.pattern = "x";
  constant.mode = RegexMode::kConstant;
  EXPECT_THROW(regex_extract(corpus_, col(kSent), constant), Error);
}

TEST_F(ExtractorsTest, IntegerGroupsBecomeTypedLiterals) {
  RegexParams p;
  p.pattern = R"((\d+))";
  p.group = 1;
  p.datatype = Datatype::kInteger;
  RegexStaging s = regex_extract(corpus_, col(kDocId), p);
  ASSERT_EQ(s.matched.size(), 4u);
  EXPECT_EQ(s.matched[0].literal->lexical(), "63");
  EXPECT_EQ(s.matched[0].literal->datatype(), Datatype::kInteger);
}

TEST_F(ExtractorsTest, DatesHitSerialAndOutlier) {
  DateStaging s = date_extract(corpus_, col(kPublished), published_params(terms_));
  ASSERT_EQ(s.hits.size(), 2u);
  EXPECT_EQ(s.hits[0].ref, at(0, kPublished));
  EXPECT_FALSE(s.hits[0].pattern.has_value());
  EXPECT_EQ(s.hits[0].iso_date, day_walk(1970, 1, 1, 42415));
  EXPECT_EQ(s.hits[1].ref, at(3, kPublished));
  EXPECT_EQ(s.hits[1].pattern, std::optional<std::size_t>(0));
  EXPECT_EQ(s.hits[1].iso_date, "2010-05-15");
  ASSERT_EQ(s.outliers.size(), 1u);
  EXPECT_EQ(s.outliers[0].ref, at(1, kPublished));
}

TEST_F(ExtractorsTest, SpreadsheetEpochGivesCalendarDate) {
  DateStaging s = date_extract(corpus_, col(kPublished), published_params(terms_, kExcelEpoch));
  ASSERT_FALSE(s.hits.empty());
  EXPECT_EQ(s.hits[0].iso_date, "2016-02-15");
  EXPECT_EQ(s.hits[0].iso_date, day_walk(1899, 12, 30, 42415));
}

TEST(DateArithmeticTest, AddDaysAgreesWithDayWalk) {
  for (long n : {0L, 1L, 58L, 59L, 60L, 365L, 366L, 1461L, 10957L, 42415L, 47482L}) {
    EXPECT_EQ(add_days("1970-01-01", n), day_walk(1970, 1, 1, n)) << n;
    EXPECT_EQ(add_days("1899-12-30", n), day_walk(1899, 12, 30, n)) << n;
    EXPECT_EQ(add_days("2000-02-28", n), day_walk(2000, 2, 28, n)) << n;
  }
  EXPECT_THROW(add_days("1970-13-01", 1), Error);
}

TEST(DateExtractTest, PatternRolesAndInvalidDates) {
  Corpus corpus(kBase);
  SheetSpec sheet{"S",
                  {CellSpec::text(0, 0, "15.13.2010"), CellSpec::text(1, 0, "2011-07"),
                   CellSpec::text(2, 0, "3 March 2012"), CellSpec::text(3, 0, "29.02.2013")}};
  const Workbook &wb = corpus.add(load_workbook(write_xlsx({sheet}), WorkbookFormat::kXlsx));
  DateParams p;
  p.property = Resource("http://example.org/published");
  p.patterns = {{R"((\d{2})\.(\d{2})\.(\d{4}))", "DMY"},
                {R"(^(\d{4})-(\d{2})$)", "YM"},
                {R"((\d{1,2}) (\w+) (\d{4}))", "DNY"}};
  DateStaging s = date_extract(corpus, column_selection(wb.id(), "S", 0, 0, 3), p);
  ASSERT_EQ(s.hits.size(), 2u);
  EXPECT_EQ(s.hits[0].iso_date, "2011-07-01");
  EXPECT_EQ(s.hits[0].pattern, std::optional<std::size_t>(1));
  EXPECT_EQ(s.hits[1].iso_date, "2012-03-03");
  ASSERT_EQ(s.outliers.size(), 2u);
  EXPECT_EQ(s.outliers[0].ref.row, 0u);  // month 13
  EXPECT_EQ(s.outliers[1].ref.row, 3u);  // not a leap year

  p.patterns = {{R"((\d+))", "YMD"}};
  EXPECT_THROW(date_extract(corpus, column_selection(wb.id(), "S", 0, 0, 3), p), Error);
  p.patterns = {{R"((\d+))", "Y"}};
  p.epoch = "nope";
  EXPECT_THROW(date_extract(corpus, column_selection(wb.id(), "S", 0, 0, 3), p), Error);
}

TEST(PersonNameTest, CommaAndTokenForms) {
  NameParts a = parse_person_name("Smith, Leo");
  EXPECT_EQ(a.last, "Smith");
  EXPECT_EQ(a.first, std::optional<std::string>("Leo"));
  NameParts b = parse_person_name("Anna Maria Weber");
  EXPECT_EQ(b.last, "Weber");
  EXPECT_EQ(b.first, std::optional<std::string>("Anna Maria"));
  NameParts c = parse_person_name("Cooper");
  EXPECT_EQ(c.last, "Cooper");
  EXPECT_FALSE(c.first.has_value());
}

TEST_F(ExtractorsTest, PersonsReconcileToThreeRecords) {
  PersonIndex index = person_extract(corpus_, col(kEditor));
  ASSERT_EQ(index.records.size(), 3u);
  const PersonRecord &cooper = index.records[0];
  EXPECT_EQ(cooper.label(), "Cooper");
  ASSERT_EQ(cooper.mentions.size(), 1u);
  EXPECT_TRUE(cooper.mentions[0].struck);

  const PersonRecord &smith = index.records[1];
  EXPECT_EQ(smith.label(), "Leo Smith");
  ASSERT_EQ(smith.mentions.size(), 3u);
  EXPECT_FALSE(smith.mentions[0].struck);
  EXPECT_EQ(smith.mentions[2].comment, "(new)");
  EXPECT_EQ(smith.mentions[2].surface, "Smith");

  const PersonRecord &thomas = index.records[2];
  EXPECT_EQ(thomas.label(), "Emma Thomas");
  ASSERT_EQ(thomas.mentions.size(), 2u);
  EXPECT_EQ(thomas.mentions[1].surface, "Thomas, E.");
  EXPECT_EQ(thomas.mentions[1].ref, at(3, kEditor));
}

TEST_F(ExtractorsTest, PersonEdits) {
  PersonIndex index = person_extract(corpus_, col(kEditor));
  std::string cooper = index.records[0].id, smith = index.records[1].id, thomas = index.records[2].id;

  apply_person_edit(corpus_, index, {PersonEditKind::kSwapNames, thomas, "", std::nullopt, ""});
  EXPECT_EQ(index.find(thomas)->label(), "Thomas Emma");
  EXPECT_THROW(apply_person_edit(corpus_, index, {PersonEditKind::kSwapNames, cooper, "", std::nullopt, ""}),
               Error);

  apply_person_edit(corpus_, index, {PersonEditKind::kRemoveMention, smith, "", at(3, kEditor), "Smith"});
  EXPECT_EQ(index.find(smith)->mentions.size(), 2u);
  EXPECT_THROW(apply_person_edit(corpus_, index, {PersonEditKind::kRemoveMention, smith, "", at(3, kEditor), ""}),
               Error);

  apply_person_edit(corpus_, index, {PersonEditKind::kAddMention, cooper, "", at(1, kEditor), "Emma"});
  EXPECT_EQ(index.find(cooper)->mentions.size(), 2u);
  EXPECT_THROW(apply_person_edit(corpus_, index, {PersonEditKind::kAddMention, cooper, "", at(1, kEditor), "Zed"}),
               Error);

  apply_person_edit(corpus_, index, {PersonEditKind::kMerge, smith, cooper, std::nullopt, ""});
  EXPECT_EQ(index.find(cooper), nullptr);
  EXPECT_EQ(index.find(smith)->mentions.size(), 4u);
  EXPECT_THROW(apply_person_edit(corpus_, index, {PersonEditKind::kMerge, smith, smith, std::nullopt, ""}), Error);

  apply_person_edit(corpus_, index, {PersonEditKind::kRemovePerson, thomas, "", std::nullopt, ""});
  EXPECT_EQ(index.records.size(), 1u);
  try {
    apply_person_edit(corpus_, index, {PersonEditKind::kRemovePerson, "p99", "", std::nullopt, ""});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdit);
  }
}

TEST_F(ExtractorsTest, AttachmentRelationshipFindsOnePair) {
  RelationshipStaging s = relationship_discover(corpus_, col(kDocId), attachment_relationship_params());
  EXPECT_EQ(s.group_a.size(), 3u);
  EXPECT_EQ(s.group_b.size(), 1u);
  ASSERT_EQ(s.pairs.size(), 1u);
  EXPECT_EQ(s.pairs[0].a, at(1, kDocId));
  EXPECT_EQ(s.pairs[0].b, at(2, kDocId));
  EXPECT_FALSE(s.pairs[0].struck);
  EXPECT_EQ(s.comparisons, 3u);
}

TEST(RelationshipTest, JoinConditions) {
  Corpus corpus(kBase);
  SheetSpec sheet{"S",
                  {CellSpec::text(0, 0, "a:K1"), CellSpec::text(1, 0, "b:K1"), CellSpec::text(2, 0, "b:XK1"),
                   CellSpec::text(3, 0, "b:K2")}};
  const Workbook &wb = corpus.add(load_workbook(write_xlsx({sheet}), WorkbookFormat::kXlsx));
  Selection sel = column_selection(wb.id(), "S", 0, 0, 3);
  RelationshipParams p{"^a:(.*)$", "^b:(.*)$", JoinCondition::kEqual};
  EXPECT_EQ(relationship_discover(corpus, sel, p).pairs.size(), 1u);
  p.condition = JoinCondition::kSuffix;
  EXPECT_EQ(relationship_discover(corpus, sel, p).pairs.size(), 2u);
  p.condition = JoinCondition::kPrefix;
  EXPECT_EQ(relationship_discover(corpus, sel, p).pairs.size(), 1u);
  p = {"^a:(K)(\\d)$", "^b:(X?K)(\\d)$", JoinCondition::kCustom, 2, 2};
  EXPECT_EQ(relationship_discover(corpus, sel, p).pairs.size(), 2u);
  p.group_b = 3;
  EXPECT_THROW(relationship_discover(corpus, sel, p), Error);
  p = {"^.:", "K\\d$", JoinCondition::kPrefix};
  EXPECT_EQ(relationship_discover(corpus, sel, p).warnings.size(), 4u);
}

TEST(EnumNamesTest, RoundTrip) {
  for (auto m : {RegexMode::kLiteral, RegexMode::kConstant}) EXPECT_EQ(parse_regex_mode(regex_mode_name(m)), m);
  for (auto c : {JoinCondition::kPrefix, JoinCondition::kEqual, JoinCondition::kSuffix, JoinCondition::kCustom})
    EXPECT_EQ(parse_join_condition(join_condition_name(c)), c);
  for (auto k : {PersonEditKind::kSwapNames, PersonEditKind::kMerge, PersonEditKind::kAddMention,
                 PersonEditKind::kRemoveMention, PersonEditKind::kRemovePerson})
    EXPECT_EQ(parse_person_edit(person_edit_name(k)), k);
  EXPECT_THROW(parse_join_condition("nearby"), Error);
}

}  // namespace
}  // namespace sheetgraph::testing
