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

// HTTP/JSON facade over sessions. Routes live under /api/v1:
//
//   POST /projects?format=xlsx|csv[&base_uri=]         body: workbook bytes
//   GET  /projects/{p}
//   POST /projects/{p}/workbooks?format=               body: workbook bytes
//   GET  /projects/{p}/workbooks/{wb}/sheets/{sheet}?row=&column=&rows=&columns=
//   POST /projects/{p}/stagings                        {"selection", "params"}
//   GET  /projects/{p}/stagings
//   GET  /projects/{p}/stagings/{s}
//   POST /projects/{p}/stagings/{s}/edit               kind-specific edit
//   POST /projects/{p}/stagings/{s}/commit
//   POST /projects/{p}/stagings/{s}/discard
//   GET  /projects/{p}/commits
//   POST /projects/{p}/commits/{c}/undo
//   POST /projects/{p}/inspect?format=                 {"selection"}
//   POST /projects/{p}/annotations/remove              {"selection", "predicate"?}
//   GET  /projects/{p}/orphans
//   POST /projects/{p}/collect                         collector config + "rerun"
//   POST /projects/{p}/lift                            {"predicate"}
//   GET  /projects/{p}/export/{matching|knowledge}?format=
//   GET  /projects/{p}/log
//
// Errors are JSON {"code", "message", "parameter"} with a 4xx status.

#ifndef SHEETGRAPH_SERVICE_H_
#define SHEETGRAPH_SERVICE_H_

#include <map>
#include <memory>
#include <string>

#include "sheetgraph/config.h"

namespace sheetgraph {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

class ApiService {
 public:
  // Projects found under config.storage_dir are restored by replay.
  explicit ApiService(AppConfig config);
  ~ApiService();

  ApiService(const ApiService &) = delete;
  ApiService &operator=(const ApiService &) = delete;

  // Transport-free dispatch; the HTTP server forwards to it.
  ApiResponse handle(const ApiRequest &request);

  // Binds to config.host. Port 0 picks a free port. Returns the bound
  // port, or -1 when binding fails.
  int bind(int port);
  // Blocks until stop() is called from another thread.
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sheetgraph

#endif  // SHEETGRAPH_SERVICE_H_
