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

#include "sheetgraph/config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sheetgraph/error.h"

namespace sheetgraph {

namespace {

using Json = nlohmann::json;

[[noreturn]] void invalid(const std::string &key, const std::string &what) {
  throw Error(ErrorCode::kConfig, "config: '" + key + "' " + what, key);
}

std::string string_value(const Json &v, const std::string &key) {
  if (!v.is_string()) invalid(key, "must be a string");
  return v.get<std::string>();
}

int port_value(const std::string &text, const std::string &key) {
  try {
    std::size_t used = 0;
    int port = std::stoi(text, &used);
    if (used == text.size() && port >= 0 && port <= 65535) return port;
  } catch (const std::exception &) {
  }
  invalid(key, "must be a port number");
}

}  // namespace

std::optional<std::string> process_env(const std::string &name) {
  const char *value = std::getenv(name.c_str());
  if (!value) return std::nullopt;
  return std::string(value);
}

AppConfig load_config(const std::optional<std::string> &path, const EnvLookup &env) {
  AppConfig config;
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot read config file " + *path, "config");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buffer.str());
    } catch (const Json::exception &e) {
      throw Error(ErrorCode::kConfig, "config file " + *path + " is not valid JSON: " + e.what(), "config");
    }
    if (!doc.is_object()) throw Error(ErrorCode::kConfig, "config file must hold a JSON object", "config");
    for (const auto &[key, value] : doc.items()) {
      if (key == "host") {
        config.host = string_value(value, key);
      } else if (key == "port") {
        if (!value.is_number_integer()) invalid(key, "must be an integer");
        config.port = port_value(std::to_string(value.get<long long>()), key);
      } else if (key == "storage_dir") {
        config.storage_dir = string_value(value, key);
      } else if (key == "base_uri") {
        config.base_uri = string_value(value, key);
      } else if (key == "epoch") {
        config.epoch = string_value(value, key);
      } else if (key == "format") {
        try {
          config.format = parse_rdf_format(string_value(value, key));
        } catch (const Error &) {
          invalid(key, "must be turtle or ntriples");
        }
      } else if (key == "workbook") {
        config.workbook = string_value(value, key);
      } else if (key == "log") {
        config.log = string_value(value, key);
      } else if (key == "out") {
        config.out = string_value(value, key);
      } else {
        invalid(key, "is not a known setting");
      }
    }
  }
  if (auto port = env("SHEETGRAPH_PORT")) config.port = port_value(*port, "SHEETGRAPH_PORT");
  if (auto dir = env("SHEETGRAPH_STORAGE_DIR")) config.storage_dir = *dir;
  return config;
}

}  // namespace sheetgraph
