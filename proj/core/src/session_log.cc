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

// Session log replay. Every entry is re-executed through the public API;
// commit-like entries carry their delta, which must come out identical.

#include <map>

#include "session_state.h"
#include "sheetgraph/codec.h"

namespace sheetgraph {

namespace {

struct LogLine {
  std::size_t number = 0;
  std::size_t offset = 0;
  Json entry;
};

std::vector<LogLine> split_log(std::string_view log) {
  std::vector<LogLine> lines;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos < log.size()) {
    std::size_t end = log.find('\n', pos);
    if (end == std::string_view::npos) end = log.size();
    ++number;
    std::string_view text = log.substr(pos, end - pos);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.find_first_not_of(" \t") != std::string_view::npos) {
      LogLine line{number, pos, {}};
      try {
        line.entry = Json::parse(text);
      } catch (const Json::exception &e) {
        throw ParseError("session log line " + std::to_string(number) + ": " + e.what(), pos, number);
      }
      if (!line.entry.is_object()) {
        throw ParseError("session log line " + std::to_string(number) + ": not an object", pos, number);
      }
      auto v = line.entry.find("v");
      if (v == line.entry.end() || *v != kLogVersion) {
        throw ParseError("session log line " + std::to_string(number) + ": unsupported schema version",
                         pos, number);
      }
      lines.push_back(std::move(line));
    }
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> string_list(const Json &entry, const char *name) {
  auto it = entry.find(name);
  if (it == entry.end() || !it->is_array()) {
    throw Error(ErrorCode::kParameter, std::string("field '") + name + "' must be an array", name);
  }
  return it->get<std::vector<std::string>>();
}

std::string text_field(const Json &entry, const char *name) {
  auto it = entry.find(name);
  if (it == entry.end() || !it->is_string()) {
    throw Error(ErrorCode::kParameter, std::string("field '") + name + "' must be a string", name);
  }
  return it->get<std::string>();
}

[[noreturn]] void diverged(const LogLine &line, const std::string &what) {
  throw Error(ErrorCode::kReplay, "session log line " + std::to_string(line.number) + ": " + what);
}

void expect_equal(const LogLine &line, const std::string &what, const std::string &logged,
                  const std::string &actual) {
  if (logged != actual) diverged(line, what + " is " + actual + ", log says " + logged);
}

void expect_delta(const LogLine &line, const char *field, const std::vector<Triple> &added) {
  if (string_list(line.entry, field) != ntriples_lines(added)) {
    diverged(line, std::string(field) + " delta differs from the logged one");
  }
}

}  // namespace

std::unique_ptr<Session> Session::replay(std::string_view log,
                                         const std::vector<std::string> &workbook_bytes,
                                         const std::string &default_epoch) {
  std::vector<LogLine> lines = split_log(log);
  if (lines.empty()) return std::make_unique<Session>();

  std::map<std::string, const std::string *> by_checksum;
  for (const auto &bytes : workbook_bytes) by_checksum.emplace(content_checksum(bytes), &bytes);

  std::unique_ptr<Session> session;
  for (const LogLine &line : lines) {
    const Json &e = line.entry;
    std::string op;
    // Decoding failures are malformed lines; engine failures are divergence.
    try {
      op = text_field(e, "op");
      if (!session) {
        if (op != "open_project") {
          throw Error(ErrorCode::kParameter, "the log must start with open_project", "op");
        }
        session = std::make_unique<Session>(text_field(e, "base_uri"));
        continue;
      }
      if (op == "load_workbook") {
        std::string checksum = text_field(e, "checksum");
        WorkbookFormat format = parse_workbook_format(text_field(e, "format"));
        auto it = by_checksum.find(checksum);
        if (it == by_checksum.end()) {
          throw Error(ErrorCode::kReplay, "session log line " + std::to_string(line.number) +
                                              ": no workbook with checksum " + checksum +
                                              " was supplied (input changed?)");
        }
        std::string id = session->load_workbook(*it->second, format);
        expect_equal(line, "workbook id", text_field(e, "workbook_id"), id);
      } else if (op == "run") {
        StagingRequest request = decode_request(e.at("request"), default_epoch);
        StagedResult staged = session->run(request);
        expect_equal(line, "staging id", text_field(e, "staging_id"), staged.staging_id);
      } else if (op == "adjust") {
        std::string id = text_field(e, "staging_id");
        StagingKind kind = session->staging(id).kind;
        session->adjust(id, decode_adjustment(kind, e.at("adjustment")));
      } else if (op == "discard") {
        session->discard(text_field(e, "staging_id"));
      } else if (op == "commit") {
        CommitRecord record = session->commit(text_field(e, "staging_id"));
        expect_equal(line, "commit id", text_field(e, "commit_id"), record.commit_id);
        expect_delta(line, "matching", record.matching_added);
        expect_delta(line, "knowledge", record.knowledge_added);
      } else if (op == "remove_annotations") {
        std::optional<Resource> predicate;
        if (auto p = e.find("predicate"); p != e.end() && !p->is_null()) {
          predicate = Resource(p->get<std::string>());
        }
        std::size_t removed = session->remove_annotations(decode_selection(e.at("selection")), predicate);
        expect_equal(line, "removed count", e.at("removed").dump(), std::to_string(removed));
      } else if (op == "undo") {
        session->undo(text_field(e, "commit_id"));
      } else if (op == "collect") {
        bool rerun = e.contains("rerun") && e.at("rerun").get<bool>();
        CollectOutcome out = session->collect(decode_collector_config(e.at("config")), rerun);
        expect_equal(line, "commit id", text_field(e, "commit_id"), out.commit_id);
        expect_delta(line, "knowledge", session->commit_record(out.commit_id).knowledge_added);
      } else if (op == "lift") {
        LiftOutcome out = session->lift(Resource(text_field(e, "predicate")));
        expect_equal(line, "commit id", text_field(e, "commit_id"), out.commit_id);
        expect_delta(line, "knowledge", session->commit_record(out.commit_id).knowledge_added);
      } else if (op == "open_project") {
        throw Error(ErrorCode::kParameter, "open_project may only appear once", "op");
      } else {
        throw Error(ErrorCode::kParameter, "unknown op '" + op + "'", "op");
      }
    } catch (const ParseError &) {
      throw;
    } catch (const Json::exception &ex) {
      throw ParseError("session log line " + std::to_string(line.number) + ": " + ex.what(),
                       line.offset, line.number);
    } catch (const Error &ex) {
      if (ex.code() == ErrorCode::kReplay) throw;
      if (ex.code() == ErrorCode::kParameter || ex.code() == ErrorCode::kConfig) {
        throw ParseError("session log line " + std::to_string(line.number) + ": " + ex.what(),
                         line.offset, line.number);
      }
      diverged(line, ex.what());
    }
  }
  return session;
}

}  // namespace sheetgraph
