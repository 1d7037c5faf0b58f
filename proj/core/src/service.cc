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

#include "sheetgraph/service.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "httplib.h"
#include "sheetgraph/codec.h"
#include "sheetgraph/session.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace fs = std::filesystem;

namespace {

constexpr std::uint32_t kDefaultWindow = 100;
constexpr std::uint32_t kMaxWindow = 1000;

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLookup:
    case ErrorCode::kStagingNotFound:
    case ErrorCode::kCommitNotFound:
      return 404;
    case ErrorCode::kCollectionOverlap:
    case ErrorCode::kReplay:
      return 409;
    case ErrorCode::kTransform:
    case ErrorCode::kEdit:
      return 422;
    case ErrorCode::kIo:
      return 500;
    default:
      return 400;
  }
}

ApiResponse json_response(const Json &body, int status = 200) {
  return {status, "application/json", body.dump(), {}};
}

ApiResponse error_response(const Error &error) { return json_response(encode(error), status_for(error.code())); }

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path &path, std::string_view data) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

Json parse_body(const std::string &body) {
  try {
    return body.empty() ? Json::object() : Json::parse(body);
  } catch (const Json::exception &e) {
    throw ParseError(std::string("request body is not valid JSON: ") + e.what(), std::nullopt);
  }
}

std::uint32_t query_index(const ApiRequest &req, const std::string &name, std::uint32_t fallback) {
  auto it = req.query.find(name);
  if (it == req.query.end()) return fallback;
  try {
    std::size_t used = 0;
    unsigned long value = std::stoul(it->second, &used);
    if (used == it->second.size() && value <= 0xFFFFFFFFUL) return static_cast<std::uint32_t>(value);
  } catch (const std::exception &) {
  }
  throw Error(ErrorCode::kParameter, "query parameter '" + name + "' must be a non-negative integer", name);
}

std::string query_string(const ApiRequest &req, const std::string &name, const std::string &fallback) {
  auto it = req.query.find(name);
  return it == req.query.end() ? fallback : it->second;
}

std::vector<std::string> split_path(const std::string &path) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    std::size_t end = path.find('/', pos);
    if (end == std::string::npos) end = path.size();
    if (end > pos) {
      auto decoded = percent_decode(path.substr(pos, end - pos));
      if (!decoded) throw Error(ErrorCode::kParameter, "malformed escape in path", "path");
      parts.push_back(*decoded);
    }
    pos = end + 1;
  }
  return parts;
}

struct Project {
  std::string id;
  std::unique_ptr<Session> session;
  std::mutex io_mu;  // serializes writes to the project directory
};

}  // namespace

struct ApiService::Impl {
  AppConfig config;
  std::mutex mu;
  std::map<std::string, std::shared_ptr<Project>> projects;
  std::size_t next_project = 1;
  httplib::Server server;

  explicit Impl(AppConfig c) : config(std::move(c)) {}

  fs::path project_dir(const std::string &id) const { return fs::path(config.storage_dir) / id; }

  void restore() {
    if (config.storage_dir.empty() || !fs::exists(config.storage_dir)) return;
    for (const auto &entry : fs::directory_iterator(config.storage_dir)) {
      if (!entry.is_directory()) continue;
      std::string id = entry.path().filename().string();
      fs::path log_path = entry.path() / "session.jsonl";
      if (id.rfind("prj", 0) != 0 || !fs::exists(log_path)) continue;
      std::vector<std::string> inputs;
      if (fs::exists(entry.path() / "workbooks")) {
        for (const auto &wb : fs::directory_iterator(entry.path() / "workbooks")) {
          inputs.push_back(read_file(wb.path()));
        }
      }
      auto project = std::make_shared<Project>();
      project->id = id;
      project->session = Session::replay(read_file(log_path), inputs, config.epoch);
      projects.emplace(id, project);
      try {
        next_project = std::max(next_project, std::stoul(id.substr(3)) + 1);
      } catch (const std::exception &) {
      }
    }
  }

  void persist(Project &project) {
    if (config.storage_dir.empty()) return;
    std::lock_guard lock(project.io_mu);
    fs::create_directories(project_dir(project.id));
    write_file(project_dir(project.id) / "session.jsonl", project.session->log_text());
  }

  void persist_workbook(Project &project, std::string_view bytes, WorkbookFormat format) {
    if (config.storage_dir.empty()) return;
    std::lock_guard lock(project.io_mu);
    fs::path dir = project_dir(project.id) / "workbooks";
    fs::create_directories(dir);
    std::string name = content_checksum(bytes).substr(7) + "." + std::string(format_tag(format));
    write_file(dir / name, bytes);
  }

  std::shared_ptr<Project> find(const std::string &id) {
    std::lock_guard lock(mu);
    auto it = projects.find(id);
    if (it == projects.end()) throw Error(ErrorCode::kLookup, "unknown project '" + id + "'", "project");
    return it->second;
  }

  Json project_json(const Project &project) {
    Json workbooks = Json::array();
    for (const auto &wb : project.session->workbooks()) {
      Json sheets = Json::array();
      for (const Sheet &sheet : wb->sheets()) {
        sheets.push_back({{"name", sheet.name()},
                          {"rows", sheet.row_count()},
                          {"columns", sheet.column_count()},
                          {"cells", sheet.size()}});
      }
      workbooks.push_back({{"workbook_id", wb->id()}, {"checksum", wb->checksum()}, {"sheets", sheets}});
    }
    return {{"project_id", project.id}, {"base_uri", project.session->base_uri()}, {"workbooks", workbooks}};
  }

  ApiResponse create_project(const ApiRequest &req) {
    WorkbookFormat format = parse_workbook_format(query_string(req, "format", "xlsx"));
    auto project = std::make_shared<Project>();
    project->session = std::make_unique<Session>(query_string(req, "base_uri", config.base_uri));
    std::string wb_id = project->session->load_workbook(req.body, format);
    {
      std::lock_guard lock(mu);
      project->id = "prj" + std::to_string(next_project++);
      projects.emplace(project->id, project);
    }
    persist_workbook(*project, req.body, format);
    persist(*project);
    Json out = project_json(*project);
    out["workbook_id"] = wb_id;
    return json_response(out, 201);
  }

  ApiResponse sheet_window(Project &project, const std::string &wb_id, const std::string &sheet_name,
                           const ApiRequest &req) {
    auto wb = project.session->workbook(wb_id);
    const Sheet &sheet = wb->sheet(sheet_name);
    std::uint32_t row0 = query_index(req, "row", 0);
    std::uint32_t col0 = query_index(req, "column", 0);
    std::uint32_t rows = std::min(query_index(req, "rows", kDefaultWindow), kMaxWindow);
    std::uint32_t cols = std::min(query_index(req, "columns", kDefaultWindow), kMaxWindow);
    Json cells = Json::array();
    for (const auto &[pos, cell] : sheet.cells()) {
      if (pos.row < row0 || pos.row - row0 >= rows || pos.column < col0 || pos.column - col0 >= cols) {
        continue;
      }
      Json c = encode(cell);
      Resource uri(project.session->deep_link(cell.ref).uri);
      c["uri"] = uri.uri();
      c["badges"] = project.session->count(GraphName::kMatching, {uri, std::nullopt, std::nullopt});
      cells.push_back(c);
    }
    return json_response({{"workbook", wb_id},
                          {"sheet", sheet_name},
                          {"row_count", sheet.row_count()},
                          {"column_count", sheet.column_count()},
                          {"window", {{"row", row0}, {"column", col0}, {"rows", rows}, {"columns", cols}}},
                          {"cells", cells}});
  }

  ApiResponse project_route(Project &project, const std::string &method,
                            const std::vector<std::string> &rest, const ApiRequest &req) {
    Session &session = *project.session;
    auto is = [&](const char *m, std::initializer_list<const char *> shape) {
      if (method != m || rest.size() != shape.size()) return false;
      std::size_t i = 0;
      for (const char *part : shape) {
        if (part[0] != '*' && rest[i] != part) return false;
        ++i;
      }
      return true;
    };

    if (is("GET", {})) return json_response(project_json(project));
    if (is("POST", {"workbooks"})) {
      WorkbookFormat format = parse_workbook_format(query_string(req, "format", "xlsx"));
      std::string id = session.load_workbook(req.body, format);
      persist_workbook(project, req.body, format);
      persist(project);
      Json out = project_json(project);
      out["workbook_id"] = id;
      return json_response(out, 201);
    }
    if (is("GET", {"workbooks", "*", "sheets", "*"})) return sheet_window(project, rest[1], rest[3], req);
    if (is("POST", {"stagings"})) {
      StagedResult staged = session.run(decode_request(parse_body(req.body), config.epoch));
      persist(project);
      return json_response(encode(staged), 201);
    }
    if (is("GET", {"stagings"})) return json_response(session.staging_ids());
    if (is("GET", {"stagings", "*"})) return json_response(encode(session.staging(rest[1])));
    if (is("POST", {"stagings", "*", "edit"})) {
      StagingKind kind = session.staging(rest[1]).kind;
      StagedResult staged = session.adjust(rest[1], decode_adjustment(kind, parse_body(req.body)));
      persist(project);
      return json_response(encode(staged));
    }
    if (is("POST", {"stagings", "*", "commit"})) {
      CommitRecord record = session.commit(rest[1]);
      persist(project);
      return json_response(encode(record));
    }
    if (is("POST", {"stagings", "*", "discard"})) {
      session.discard(rest[1]);
      persist(project);
      return json_response({{"discarded", rest[1]}});
    }
    if (is("GET", {"commits"})) {
      Json out = Json::array();
      for (const auto &c : session.commits()) out.push_back(encode(c));
      return json_response(out);
    }
    if (is("POST", {"commits", "*", "undo"})) {
      CommitRecord record = session.undo(rest[1]);
      persist(project);
      return json_response(encode(record));
    }
    if (is("POST", {"inspect"})) {
      RdfFormat format = parse_rdf_format(query_string(req, "format", "turtle"));
      Json body = parse_body(req.body);
      if (!body.contains("selection")) {
        throw Error(ErrorCode::kParameter, "field 'selection' is missing", "selection");
      }
      return {200, std::string(rdf_media_type(format)), session.inspect(decode_selection(body["selection"]), format), {}};
    }
    if (is("POST", {"annotations", "remove"})) {
      Json body = parse_body(req.body);
      if (!body.contains("selection")) {
        throw Error(ErrorCode::kParameter, "field 'selection' is missing", "selection");
      }
      std::optional<Resource> predicate;
      if (body.contains("predicate") && !body["predicate"].is_null()) {
        if (!body["predicate"].is_string()) {
          throw Error(ErrorCode::kParameter, "field 'predicate' must be a string", "predicate");
        }
        predicate = Resource(body["predicate"].get<std::string>());
      }
      std::size_t removed = session.remove_annotations(decode_selection(body["selection"]), predicate);
      persist(project);
      return json_response({{"removed", removed}});
    }
    if (is("GET", {"orphans"})) {
      Json out = Json::array();
      for (const auto &r : session.orphans()) out.push_back(r.uri());
      return json_response(out);
    }
    if (is("POST", {"collect"})) {
      Json body = parse_body(req.body);
      bool rerun = body.contains("rerun") && body["rerun"].is_boolean() && body["rerun"].get<bool>();
      CollectOutcome out = session.collect(decode_collector_config(body), rerun);
      persist(project);
      Json j = encode(out.report);
      j["commit_id"] = out.commit_id;
      return json_response(j);
    }
    if (is("POST", {"lift"})) {
      Json body = parse_body(req.body);
      if (!body.contains("predicate") || !body["predicate"].is_string()) {
        throw Error(ErrorCode::kParameter, "field 'predicate' must be a string", "predicate");
      }
      LiftOutcome out = session.lift(Resource(body["predicate"].get<std::string>()));
      persist(project);
      Json j = encode(out.report);
      j["commit_id"] = out.commit_id;
      return json_response(j);
    }
    if (is("GET", {"export", "*"})) {
      GraphName graph = parse_graph_name(rest[1]);
      RdfFormat format = parse_rdf_format(query_string(req, "format", "turtle"));
      ApiResponse resp{200, std::string(rdf_media_type(format)), session.export_graph(graph, format), {}};
      resp.headers["Content-Disposition"] = "attachment; filename=\"" + rest[1] + "." +
                                            (format == RdfFormat::kTurtle ? "ttl" : "nt") + "\"";
      return resp;
    }
    if (is("GET", {"log"})) {
      ApiResponse resp{200, "application/x-ndjson", session.log_text(), {}};
      resp.headers["Content-Disposition"] = "attachment; filename=\"session.jsonl\"";
      return resp;
    }
    throw Error(ErrorCode::kLookup, "no route " + method + " " + req.path, "path");
  }

  ApiResponse dispatch(const ApiRequest &req) {
    std::vector<std::string> parts = split_path(req.path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "v1") {
      throw Error(ErrorCode::kLookup, "no route " + req.method + " " + req.path, "path");
    }
    std::vector<std::string> rest(parts.begin() + 2, parts.end());
    if (rest.size() == 1 && rest[0] == "health" && req.method == "GET") {
      return json_response({{"status", "ok"}});
    }
    if (rest.size() == 1 && rest[0] == "projects") {
      if (req.method == "POST") return create_project(req);
      if (req.method == "GET") {
        Json ids = Json::array();
        std::lock_guard lock(mu);
        for (const auto &[id, _] : projects) ids.push_back(id);
        return json_response(ids);
      }
    }
    if (rest.size() >= 2 && rest[0] == "projects") {
      auto project = find(rest[1]);
      return project_route(*project, req.method, {rest.begin() + 2, rest.end()}, req);
    }
    throw Error(ErrorCode::kLookup, "no route " + req.method + " " + req.path, "path");
  }
};

ApiService::ApiService(AppConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {
  impl_->restore();
  impl_->server.set_payload_max_length(256u << 20);
  auto forward = [this](const httplib::Request &in, httplib::Response &out) {
    // in.path is already percent-decoded; dispatch decodes per segment so
    // sheet names containing '/' survive.
    std::string raw = in.target.substr(0, in.target.find('?'));
    ApiRequest req{in.method, raw, {}, in.body};
    for (const auto &[k, v] : in.params) req.query.emplace(k, v);
    ApiResponse resp = handle(req);
    out.status = resp.status;
    for (const auto &[k, v] : resp.headers) out.set_header(k, v);
    out.set_content(resp.body, resp.content_type);
  };
  impl_->server.Get(R"(/api/v1/.*)", forward);
  impl_->server.Post(R"(/api/v1/.*)", forward);
}

ApiService::~ApiService() { stop(); }

ApiResponse ApiService::handle(const ApiRequest &request) {
  try {
    return impl_->dispatch(request);
  } catch (const Error &e) {
    return error_response(e);
  } catch (const std::exception &e) {
    return json_response({{"code", "internal"}, {"message", e.what()}, {"parameter", nullptr}}, 500);
  }
}

int ApiService::bind(int port) {
  if (port == 0) return impl_->server.bind_to_any_port(impl_->config.host);
  return impl_->server.bind_to_port(impl_->config.host, port) ? port : -1;
}

void ApiService::serve() { impl_->server.listen_after_bind(); }

void ApiService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace sheetgraph
