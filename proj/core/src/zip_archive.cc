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

#include "zip_archive.h"

#include <zlib.h>

#include <limits>

#include "sheetgraph/error.h"

namespace sheetgraph::internal {
namespace {

constexpr std::uint32_t kEndOfCentralDirectory = 0x06054b50;
constexpr std::uint32_t kCentralDirectoryHeader = 0x02014b50;
constexpr std::uint32_t kLocalFileHeader = 0x04034b50;
constexpr std::size_t kEndRecordSize = 22;
constexpr std::size_t kCentralHeaderSize = 46;
constexpr std::size_t kLocalHeaderSize = 30;

// Upper bound on a single inflated member; guards against zip bombs.
constexpr std::uint64_t kMaxMemberSize = std::uint64_t{1} << 30;

std::uint16_t u16(std::string_view b, std::size_t at) {
  if (at + 2 > b.size()) throw ParseError("zip: truncated archive", at);
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

std::uint32_t u32(std::string_view b, std::size_t at) {
  return static_cast<std::uint32_t>(u16(b, at)) |
         static_cast<std::uint32_t>(u16(b, at + 2)) << 16;
}

}  // namespace

ZipArchive::ZipArchive(std::string_view bytes) : bytes_(bytes) {
  if (bytes.size() < kEndRecordSize) {
    throw ParseError("zip: input too short for an archive", bytes.size());
  }
  // The end record sits in the last 22 + 65535 (max comment) bytes.
  std::size_t search_floor =
      bytes.size() > kEndRecordSize + 0xFFFF ? bytes.size() - kEndRecordSize - 0xFFFF : 0;
  std::size_t end_at = std::string_view::npos;
  for (std::size_t at = bytes.size() - kEndRecordSize + 1; at-- > search_floor;) {
    if (u32(bytes, at) == kEndOfCentralDirectory) {
      end_at = at;
      break;
    }
  }
  if (end_at == std::string_view::npos) {
    throw ParseError("zip: end of central directory not found", bytes.size());
  }

  std::uint16_t count = u16(bytes, end_at + 10);
  std::uint32_t dir_size = u32(bytes, end_at + 12);
  std::uint32_t dir_offset = u32(bytes, end_at + 16);
  if (dir_offset == 0xFFFFFFFFu || count == 0xFFFF) {
    throw ParseError("zip: zip64 archives are not supported", end_at);
  }
  if (std::uint64_t{dir_offset} + dir_size > end_at) {
    throw ParseError("zip: central directory out of bounds", end_at);
  }

  std::size_t at = dir_offset;
  for (std::uint16_t i = 0; i < count; ++i) {
    if (u32(bytes, at) != kCentralDirectoryHeader) {
      throw ParseError("zip: bad central directory header", at);
    }
    std::uint16_t flags = u16(bytes, at + 8);
    Entry entry;
    entry.method = u16(bytes, at + 10);
    entry.crc32 = u32(bytes, at + 16);
    entry.compressed_size = u32(bytes, at + 20);
    entry.uncompressed_size = u32(bytes, at + 24);
    std::uint16_t name_len = u16(bytes, at + 28);
    std::uint16_t extra_len = u16(bytes, at + 30);
    std::uint16_t comment_len = u16(bytes, at + 32);
    entry.local_header_offset = u32(bytes, at + 42);
    if (flags & 0x1) throw ParseError("zip: encrypted members are not supported", at);
    std::size_t name_at = at + kCentralHeaderSize;
    if (name_at + name_len > bytes.size()) throw ParseError("zip: truncated file name", name_at);
    entries_.emplace(std::string(bytes.substr(name_at, name_len)), entry);
    at = name_at + name_len + extra_len + comment_len;
  }
}

bool ZipArchive::contains(const std::string &name) const {
  return entries_.count(name) != 0;
}

std::string ZipArchive::read(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ParseError("zip: missing member " + name, std::nullopt);
  const Entry &entry = it->second;

  std::size_t at = entry.local_header_offset;
  if (u32(bytes_, at) != kLocalFileHeader) {
    throw ParseError("zip: bad local header for " + name, at);
  }
  std::size_t data_at = at + kLocalHeaderSize + u16(bytes_, at + 26) + u16(bytes_, at + 28);
  if (data_at + entry.compressed_size > bytes_.size()) {
    throw ParseError("zip: member data out of bounds: " + name, data_at);
  }
  if (entry.uncompressed_size > kMaxMemberSize) {
    throw ParseError("zip: member too large: " + name, data_at);
  }
  std::string_view data = bytes_.substr(data_at, entry.compressed_size);

  std::string out;
  if (entry.method == 0) {
    out.assign(data);
  } else if (entry.method == 8) {
    out.resize(entry.uncompressed_size);
    z_stream stream{};
    if (inflateInit2(&stream, -MAX_WBITS) != Z_OK) {
      throw ParseError("zip: inflate init failed", data_at);
    }
    stream.next_in = reinterpret_cast<Bytef *>(const_cast<char *>(data.data()));
    stream.avail_in = static_cast<uInt>(data.size());
    stream.next_out = reinterpret_cast<Bytef *>(out.data());
    stream.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&stream, Z_FINISH);
    std::size_t produced = stream.total_out;
    inflateEnd(&stream);
    if (rc != Z_STREAM_END || produced != entry.uncompressed_size) {
      throw ParseError("zip: corrupt deflate stream in " + name, data_at);
    }
  } else {
    throw ParseError("zip: unsupported compression method " +
                         std::to_string(entry.method) + " for " + name,
                     at);
  }

  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef *>(out.data()), static_cast<uInt>(out.size()));
  if (crc != entry.crc32) throw ParseError("zip: crc mismatch in " + name, data_at);
  return out;
}

}  // namespace sheetgraph::internal
