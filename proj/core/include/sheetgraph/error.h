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

#ifndef SHEETGRAPH_ERROR_H_
#define SHEETGRAPH_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sheetgraph {

// Machine-readable error categories. Each engine error carries exactly one
// code; the HTTP facade maps codes to status classes.
enum class ErrorCode {
  kParse,              // malformed workbook / document / log line
  kConfig,             // unsupported format tag, bad configuration
  kLookup,             // unknown workbook, sheet, or project
  kResolution,         // foreign or malformed deep link
  kType,               // operation applied to a cell of the wrong type
  kParameter,          // invalid extractor parameter (regex, group, ...)
  kTransform,          // transform expression failed during evaluation
  kEdit,               // invalid staging adjustment or person-index edit
  kStagingNotFound,    // unknown or discarded staging id
  kCommitNotFound,     // unknown commit id
  kReplay,             // workbook checksum mismatch or divergent replay
  kCollectionOverlap,  // rows already collected without the re-run flag
  kIo,                 // filesystem failure
};

// Stable token used in API payloads and CLI messages ("staging-not-found").
std::string_view error_code_token(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::string parameter = {})
      : std::runtime_error(message), code_(code), parameter_(std::move(parameter)) {}

  ErrorCode code() const { return code_; }
  std::string_view token() const { return error_code_token(code_); }

  // Name of the offending parameter, empty when not applicable.
  const std::string &parameter() const { return parameter_; }

 private:
  ErrorCode code_;
  std::string parameter_;
};

// Parse failure with a position: byte offset into the input and, for
// line-oriented inputs, a 1-based line (or row) number.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::optional<std::size_t> offset,
             std::optional<std::size_t> line = std::nullopt);

  const std::optional<std::size_t> &offset() const { return offset_; }
  const std::optional<std::size_t> &line() const { return line_; }

 private:
  std::optional<std::size_t> offset_;
  std::optional<std::size_t> line_;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_ERROR_H_
