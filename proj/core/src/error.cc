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

#include "sheetgraph/error.h"

namespace sheetgraph {

std::string_view error_code_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kConfig: return "config-error";
    case ErrorCode::kLookup: return "not-found";
    case ErrorCode::kResolution: return "deep-link-unresolvable";
    case ErrorCode::kType: return "type-error";
    case ErrorCode::kParameter: return "invalid-parameter";
    case ErrorCode::kTransform: return "transform-failed";
    case ErrorCode::kEdit: return "invalid-edit";
    case ErrorCode::kStagingNotFound: return "staging-not-found";
    case ErrorCode::kCommitNotFound: return "commit-not-found";
    case ErrorCode::kReplay: return "replay-mismatch";
    case ErrorCode::kCollectionOverlap: return "collection-overlap";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

namespace {

std::string with_position(const std::string &message,
                          const std::optional<std::size_t> &offset,
                          const std::optional<std::size_t> &line) {
  std::string out = message;
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (offset) out += " (byte offset " + std::to_string(*offset) + ")";
  return out;
}

}  // namespace

ParseError::ParseError(const std::string &message,
                       std::optional<std::size_t> offset,
                       std::optional<std::size_t> line)
    : Error(ErrorCode::kParse, with_position(message, offset, line)),
      offset_(offset),
      line_(line) {}

}  // namespace sheetgraph
