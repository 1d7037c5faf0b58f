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

#ifndef SHEETGRAPH_SRC_ZIP_ARCHIVE_H_
#define SHEETGRAPH_SRC_ZIP_ARCHIVE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace sheetgraph::internal {

// Read-only view over an in-memory zip archive. Supports stored and
// deflated members; zip64 and encryption are rejected with ParseError.
class ZipArchive {
 public:
  explicit ZipArchive(std::string_view bytes);

  bool contains(const std::string &name) const;
  // Decompressed member contents; throws ParseError on corruption or if the
  // member does not exist.
  std::string read(const std::string &name) const;

 private:
  struct Entry {
    std::uint16_t method = 0;
    std::uint32_t crc32 = 0;
    std::uint64_t compressed_size = 0;
    std::uint64_t uncompressed_size = 0;
    std::uint64_t local_header_offset = 0;
  };

  std::string_view bytes_;
  std::map<std::string, Entry> entries_;
};

}  // namespace sheetgraph::internal

#endif  // SHEETGRAPH_SRC_ZIP_ARCHIVE_H_
