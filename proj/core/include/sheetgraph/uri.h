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

#ifndef SHEETGRAPH_URI_H_
#define SHEETGRAPH_URI_H_

#include <optional>
#include <string>
#include <string_view>

namespace sheetgraph {

// Percent-encodes every byte outside the RFC 3986 unreserved set.
std::string percent_encode(std::string_view text);
// Inverse of percent_encode; nullopt on malformed escapes.
std::optional<std::string> percent_decode(std::string_view text);

// scheme ":" rest, with no characters that are illegal in an N-Triples IRI.
bool is_absolute_uri(std::string_view uri);

// Trims, collapses internal whitespace runs to one space, percent-encodes.
std::string slug(std::string_view label);

std::string trim(std::string_view text);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_URI_H_
