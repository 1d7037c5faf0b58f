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

#ifndef SHEETGRAPH_SRC_REGEX_UTIL_H_
#define SHEETGRAPH_SRC_REGEX_UTIL_H_

#include <string>

#include <boost/regex.hpp>

#include "sheetgraph/error.h"

namespace sheetgraph::internal {

// Perl-syntax regex; syntax errors become kParameter naming the parameter.
inline boost::regex compile_regex(const std::string &pattern, const std::string &parameter) {
  try {
    return boost::regex(pattern, boost::regex::perl);
  } catch (const boost::regex_error &e) {
    throw Error(ErrorCode::kParameter, "invalid regex '" + pattern + "': " + e.what(), parameter);
  }
}

// Searches with the engine's runaway protection mapped to kTransform.
inline bool search(const std::string &text, boost::smatch &match, const boost::regex &re) {
  try {
    return boost::regex_search(text, match, re);
  } catch (const std::runtime_error &e) {
    throw Error(ErrorCode::kTransform, std::string("regex evaluation failed: ") + e.what());
  }
}

}  // namespace sheetgraph::internal

#endif  // SHEETGRAPH_SRC_REGEX_UTIL_H_
