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

#include <iostream>

#include "properties.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph::testing {
namespace {

constexpr std::uint64_t kSeed = 20261018;
constexpr std::size_t kCases = 250;

void expect_law(const PropertyResult &r) {
  EXPECT_GE(r.cases, kMinPropertyCases) << r.name;
  EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}

TEST(PropertyTest, DeepLinkRoundTrip) { expect_law(deep_link_round_trip(kSeed, kCases)); }
TEST(PropertyTest, SerializationRoundTrip) { expect_law(serialization_round_trip(kSeed, kCases)); }
TEST(PropertyTest, CommitIdempotence) { expect_law(commit_idempotence(kSeed, kCases)); }
TEST(PropertyTest, ReplayDeterminism) { expect_law(replay_determinism(kSeed, kCases)); }
TEST(PropertyTest, TraceabilityCompleteness) { expect_law(traceability_completeness(kSeed, kCases)); }
TEST(PropertyTest, RegexPartition) { expect_law(regex_partition(kSeed, kCases)); }

// A second seed widens coverage without slowing the default run much.
TEST(PropertyTest, ReplayDeterminismSecondSeed) { expect_law(replay_determinism(kSeed + 1, kMinPropertyCases)); }

// Guards against vacuous laws: the random sessions must reach graphs with
// struck statements, person resources, instances and some undo activity.
TEST(PropertyTest, GeneratorsReachInterestingStates) {
  std::size_t with_matching = 0, with_struck = 0, with_persons = 0, with_instances = 0, with_commits = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    Session session;
    SheetSpec sheet = random_sheet(rng, "Sheet1");
    std::string wb = session.load_workbook(write_xlsx({sheet}), WorkbookFormat::kXlsx);
    random_session_ops(rng, session, wb, sheet, 20, OpMix{});
    Dataset d = session.dataset();
    Minter minter(session.base_uri());
    with_matching += !d.matching.empty();
    with_struck += d.matching.count({std::nullopt, vocab::mentions_person_struck(), std::nullopt}) > 0;
    with_persons += d.knowledge.count({std::nullopt, vocab::rdf_type(), Term(vocab::person_class())}) > 0;
    with_instances += d.knowledge.count({std::nullopt, vocab::rdf_type(), Term(minter.term("Document"))}) > 0;
    with_commits += session.commits().size() >= 3;
  }
  EXPECT_GE(with_matching, 70u);
  EXPECT_GE(with_struck, 10u);
  EXPECT_GE(with_persons, 20u);
  EXPECT_GE(with_instances, 20u);
  EXPECT_GE(with_commits, 50u);
  std::cout << "non-empty " << with_matching << ", struck " << with_struck << ", persons " << with_persons
            << ", instances " << with_instances << ", >=3 commits " << with_commits << "\n";
}

}  // namespace
}  // namespace sheetgraph::testing
