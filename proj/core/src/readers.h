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

#ifndef SHEETGRAPH_SRC_READERS_H_
#define SHEETGRAPH_SRC_READERS_H_

#include <string>
#include <string_view>
#include <vector>

#include "sheetgraph/workbook.h"

namespace sheetgraph::internal {

std::vector<Sheet> read_xlsx(std::string_view bytes, const std::string &workbook_id);
std::vector<Sheet> read_csv(std::string_view bytes, const std::string &workbook_id);

// True when an office number format code renders dates.
bool is_date_format(int builtin_id, std::string_view format_code);

}  // namespace sheetgraph::internal

#endif  // SHEETGRAPH_SRC_READERS_H_
