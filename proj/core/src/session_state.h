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

#ifndef SHEETGRAPH_SRC_SESSION_STATE_H_
#define SHEETGRAPH_SRC_SESSION_STATE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheetgraph/codec.h"
#include "sheetgraph/session.h"

namespace sheetgraph {

inline constexpr int kLogVersion = 1;

// Everything behind the session lock. Helpers assume the caller holds it.
struct Session::State {
  explicit State(std::string base);

  struct Collection {
    std::string commit_id;
    InstanceMap instances;
  };

  Corpus corpus;
  Minter minter;
  Dataset dataset;
  std::map<std::string, StagedResult> stagings;
  std::map<std::string, CommitRecord> commits;
  std::vector<std::string> commit_order;
  std::vector<Collection> collections;
  std::optional<InstanceReport> last_report;
  std::size_t next_staging = 1;
  std::size_t next_commit = 1;
  std::vector<std::string> log;

  void append(Json entry);
  StagedResult &find_staging(const std::string &id);
  // Adds the triples and records what was actually inserted.
  CommitRecord apply(std::string staging_id, std::string kind, const std::vector<Triple> &matching,
                     const std::vector<Triple> &knowledge);
  CommitRecord revert(const std::string &commit_id);
  InstanceMap all_instances() const;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_SRC_SESSION_STATE_H_
