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

#ifndef SHEETGRAPH_CONFIG_H_
#define SHEETGRAPH_CONFIG_H_

#include <functional>
#include <optional>
#include <string>

#include "sheetgraph/graph.h"

namespace sheetgraph {

// Settings shared by the command-line tool and the HTTP service. A JSON
// config file may set any field by name; SHEETGRAPH_PORT and
// SHEETGRAPH_STORAGE_DIR override the file.
struct AppConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string storage_dir;  // empty: keep projects in memory only
  std::string base_uri = "http://example.org/sheetgraph/project/default/";
  std::string epoch = "1970-01-01";
  RdfFormat format = RdfFormat::kTurtle;
  std::string workbook;
  std::string log;
  std::string out;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

// Process environment.
std::optional<std::string> process_env(const std::string &name);

// Throws Error(kConfig) for unreadable files, malformed JSON, unknown keys
// or values of the wrong type, and Error(kIo) when the file cannot be read.
AppConfig load_config(const std::optional<std::string> &path, const EnvLookup &env = process_env);

}  // namespace sheetgraph

#endif  // SHEETGRAPH_CONFIG_H_
