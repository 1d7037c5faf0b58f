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

// Seeded generator for a document-register sheet at scale. Columns:
//
//   0 document id     AB-xxxx-NN/NN, or "<earlier id> A<n>" for attachments
//   1 department      one to three codes joined by "/"
//   2 editor          one or two names on separate lines; some struck
//   3 published       dd.mm.yyyy text, a date serial, or "TODO"
//   4 type            revision code
//
// The generator keeps its own tallies, which the tests use as oracles.

#ifndef SHEETGRAPH_TESTS_SYNTHETIC_H_
#define SHEETGRAPH_TESTS_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>

namespace sheetgraph::testing {

struct SyntheticSheet {
  std::string xlsx;
  std::size_t rows = 0;
  std::size_t multi_valued_rows = 0;  // department cell with two or more codes
  std::size_t attachment_rows = 0;
  std::size_t struck_rows = 0;        // editor cell with a struck name
  std::size_t struck_mentions = 0;
  std::size_t text_dates = 0;
  std::size_t serial_dates = 0;
  std::size_t undated = 0;
  std::set<std::string> departments;
  std::set<std::string> persons;  // "First Last"
  std::set<std::string> types;
};

inline constexpr const char *kSyntheticSheet = "Register";

SyntheticSheet make_synthetic(std::size_t rows, std::uint64_t seed);

}  // namespace sheetgraph::testing

#endif  // SHEETGRAPH_TESTS_SYNTHETIC_H_
