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

// A small pure expression language that turns one text into a list of
// texts. An expression is a pipeline of stages separated by '|'; every
// stage maps each element of the current list to zero or more elements:
//
//   split("/")            split on a literal separator
//   trim()                strip surrounding whitespace
//   lower()               ASCII lower-case
//   replace("re", "fmt")  regex replacement, $1 style references
//   regex_all("re")       every match; capture group 1 if the pattern has one
//   ["x", $]              list literal; $ stands for the element itself
//
// String literals use double or single quotes with \\ \" \' \n \t \r
// escapes. The empty expression is the identity.
//
// Example: split("\n") | replace("^V\d+:\s*", "") | trim()

#ifndef SHEETGRAPH_TRANSFORM_H_
#define SHEETGRAPH_TRANSFORM_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sheetgraph {

class TransformExpr {
 public:
  static constexpr std::size_t kDefaultBudget = 10000;

  // Throws Error(kParameter, ..., "transform") on syntax errors, unknown
  // operations, wrong arity or invalid regexes.
  static TransformExpr compile(std::string_view source);

  const std::string &source() const { return source_; }

  // One step is charged per element visited by a stage, per regex match
  // and per produced element. Throws Error(kTransform) when the budget is
  // exhausted or the regex engine gives up.
  std::vector<std::string> apply(std::string_view input,
                                 std::size_t budget = kDefaultBudget) const;

 private:
  struct Program;

  std::string source_;
  std::shared_ptr<const Program> program_;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_TRANSFORM_H_
