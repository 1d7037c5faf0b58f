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
#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

#include "scripts.h"
#include "sheetgraph/codec.h"
#include "sheetgraph/config.h"

namespace sheetgraph::testing {
namespace {

namespace fs = std::filesystem;

const std::string kBase = "http://example.org/p/";

std::string field_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return std::string(e.token()) + ":" + e.parameter();
  }
  return "no error";
}

TEST(CodecTest, CellRefAndSelection) {
  CellRef ref{"wb1", "S/1", 3, 4};
  EXPECT_EQ(decode_cell_ref(encode(ref)), ref);
  Selection sel{{ref, {"wb1", "S", 0, 0}}};
  EXPECT_EQ(decode_selection(encode(sel)).cells, sel.cells);
  EXPECT_EQ(field_of([] { decode_selection(Json::object()); }), "invalid-parameter:selection");
  EXPECT_EQ(field_of([] { decode_cell_ref(Json{{"workbook", "w"}, {"sheet", "s"}, {"row", -1}, {"column", 0}}); }),
            "invalid-parameter:row");
}

TEST(CodecTest, Terms) {
  for (Term t : {Term(Resource(kBase + "x")), Term(Literal::string("a\"b")), Term(Literal("2010-05-15", Datatype::kDate)),
                 Term(Literal("12", Datatype::kInteger))}) {
    EXPECT_EQ(decode_term(encode(t)), t);
  }
  EXPECT_EQ(field_of([] { decode_term(Json{{"type", "literal"}, {"value", "x"}, {"datatype", "date"}}); }),
            "invalid-parameter:value");
}

TEST(CodecTest, EveryParameterKindRoundTrips) {
  Terms t(kBase);
  StatsParams stats = change_params(t);
  stats.include_struck = false;
  stats.as_subclass = true;
  RegexParams regex = document_id_params(t);
  regex.datatype = Datatype::kDecimal;
  RelationshipParams rel{"^(a)", "^(b)", JoinCondition::kCustom, 1, 1};
  std::vector<ExtractorParams> all = {stats, regex, attachment_hint_params(t), published_params(t, kExcelEpoch),
                                      PersonParams{}, rel};
  for (const ExtractorParams &p : all) {
    Json j = encode(p);
    EXPECT_EQ(encode(decode_params(j)), j) << j.dump();
    EXPECT_EQ(kind_of(decode_params(j)), kind_of(p));
  }
}

TEST(CodecTest, DateEpochDefaultsWhenAbsent) {
  Terms t(kBase);
  Json j = encode(ExtractorParams(published_params(t)));
  j.erase("epoch");
  EXPECT_EQ(std::get<DateParams>(decode_params(j, kExcelEpoch)).epoch, kExcelEpoch);
  EXPECT_EQ(std::get<DateParams>(decode_params(j)).epoch, kUnixEpoch);
}

TEST(CodecTest, ParameterErrorsNameTheField) {
  EXPECT_EQ(field_of([] { decode_params(Json{{"kind", "magic"}}); }), "invalid-parameter:kind");
  EXPECT_EQ(field_of([] { decode_params(Json{{"kind", "regex"}}); }), "invalid-parameter:pattern");
  EXPECT_EQ(field_of([] { decode_params(Json{{"kind", "regex"}, {"pattern", 5}}); }), "invalid-parameter:pattern");
  EXPECT_EQ(field_of([] { decode_params(Json{{"kind", "stats"}, {"property", "not a uri"}}); }),
            "invalid-parameter:property");
  EXPECT_EQ(field_of([] { decode_request(Json{{"params", {{"kind", "person"}}}}); }),
            "invalid-parameter:selection");
}

TEST(CodecTest, Adjustments) {
  StatsAdjustment stats;
  stats.rows.push_back({2, false, std::string("Label"), std::vector<std::string>{"a", "b"}, std::string("c")});
  stats.property = Resource(kBase + "p");
  stats.as_subclass = true;
  Json j = encode(Adjustment(stats));
  EXPECT_EQ(encode(decode_adjustment(StagingKind::kStats, j)), j);

  PersonEdit edit{PersonEditKind::kAddMention, "p1", "", CellRef{"wb", "S", 1, 2}, "Smith"};
  Json pj = encode(Adjustment(edit));
  EXPECT_EQ(encode(decode_adjustment(StagingKind::kPerson, pj)), pj);

  EXPECT_EQ(field_of([&] { decode_adjustment(StagingKind::kRegex, j); }), "invalid-edit:kind");
  EXPECT_EQ(field_of([] { decode_adjustment(StagingKind::kStats, Json{{"rows", {{{"create", true}}}}}); }),
            "invalid-parameter:row");
}

TEST(CodecTest, CollectorConfigRoundTrip) {
  CollectorConfig c;
  c.workbook_id = "wb1";
  c.sheet = "S";
  c.first_row = 2;
  c.last_row = 9;
  c.default_type = Resource(kBase + "Doc");
  c.required_properties = {Resource(kBase + "id")};
  c.instance_id_property = Resource(kBase + "id");
  Json j = encode(c);
  EXPECT_EQ(encode(decode_collector_config(j)), j);
  c.last_row.reset();
  c.instance_id_property.reset();
  EXPECT_EQ(encode(decode_collector_config(encode(c))), encode(c));
}

TEST(CodecTest, ErrorsCarryTokens) {
  Json e = encode(Error(ErrorCode::kStagingNotFound, "gone", "staging"));
  EXPECT_EQ(e["code"], "staging-not-found");
  EXPECT_EQ(e["parameter"], "staging");
  Json p = encode(ParseError("bad", 17, 3));
  EXPECT_EQ(p["code"], "parse-error");
  EXPECT_EQ(p["offset"], 17);
  EXPECT_EQ(p["line"], 3);
  EXPECT_TRUE(encode(Error(ErrorCode::kIo, "x"))["parameter"].is_null());
}

TEST(CodecTest, ErrorTokensAreDistinct) {
  std::map<std::string, int> seen;
  for (int c = 0; c <= static_cast<int>(ErrorCode::kIo); ++c) ++seen[std::string(error_code_token(ErrorCode(c)))];
  EXPECT_EQ(seen.size(), 13u);
  EXPECT_EQ(seen.count("deep-link-unresolvable"), 1u);
  EXPECT_EQ(seen.count("collection-overlap"), 1u);
}

TEST(CodecTest, CommitRecordDeltasAreSortedLines) {
  FixtureRun run = run_fixture_session();
  for (const CommitRecord &r : run.session->commits()) {
    Json j = encode(r);
    std::vector<std::string> lines = j["matching"];
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
    EXPECT_EQ(lines.size(), r.matching_added.size());
  }
}

class ConfigTest : public ::testing::Test {
 protected:
  ConfigTest() : path_(fs::temp_directory_path() / ("sheetgraph_config_" + std::to_string(::getpid()) + ".json")) {}
  ~ConfigTest() override { fs::remove(path_); }

  void write(const std::string &text) {
    std::ofstream(path_) << text;
  }
  static std::optional<std::string> no_env(const std::string &) { return std::nullopt; }

  fs::path path_;
};

TEST_F(ConfigTest, DefaultsWithoutFile) {
  AppConfig c = load_config(std::nullopt, no_env);
  EXPECT_EQ(c.port, 8080);
  EXPECT_EQ(c.epoch, "1970-01-01");
  EXPECT_EQ(c.base_uri, "http://example.org/sheetgraph/project/default/");
  EXPECT_EQ(c.format, RdfFormat::kTurtle);
}

TEST_F(ConfigTest, FileValuesAndEnvOverrides) {
  write(R"({"port": 9000, "storage_dir": "/a", "epoch": "1899-12-30", "format": "nt", "host": "0.0.0.0"})");
  AppConfig c = load_config(path_.string(), no_env);
  EXPECT_EQ(c.port, 9000);
  EXPECT_EQ(c.storage_dir, "/a");
  EXPECT_EQ(c.epoch, "1899-12-30");
  EXPECT_EQ(c.format, RdfFormat::kNTriples);
  EXPECT_EQ(c.host, "0.0.0.0");

  std::map<std::string, std::string> env = {{"SHEETGRAPH_PORT", "7001"}, {"SHEETGRAPH_STORAGE_DIR", "/b"}};
  AppConfig o = load_config(path_.string(), [&](const std::string &k) -> std::optional<std::string> {
    auto it = env.find(k);
    return it == env.end() ? std::nullopt : std::optional<std::string>(it->second);
  });
  EXPECT_EQ(o.port, 7001);
  EXPECT_EQ(o.storage_dir, "/b");
}

TEST_F(ConfigTest, Rejections) {
  write(R"({"prot": 1})");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:prot");
  write(R"({"port": "80"})");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:port");
  write(R"({"port": 70000})");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:port");
  write(R"({"format": "xml"})");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:format");
  write("{nope");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:config");
  write("[]");
  EXPECT_EQ(field_of([&] { load_config(path_.string(), no_env); }), "config-error:config");
  EXPECT_EQ(field_of([] { load_config("/nonexistent/sheetgraph.json", no_env); }), "io-error:config");
  EXPECT_EQ(field_of([] {
              load_config(std::nullopt, [](const std::string &) { return std::optional<std::string>("x"); });
            }),
            "config-error:SHEETGRAPH_PORT");
}

}  // namespace
}  // namespace sheetgraph::testing
