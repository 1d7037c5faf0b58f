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

// sheetgraph: batch replay, export, inspection and workbook statistics, plus
// the HTTP service.
//
//   sheetgraph replay --workbook t.xlsx --log session.jsonl --out dir/
//   sheetgraph export --workbook t.xlsx --log session.jsonl --graph knowledge
//   sheetgraph inspect --workbook t.xlsx --log session.jsonl --cell Sheet1:0:3
//   sheetgraph stats-report --workbook t.xlsx
//   sheetgraph serve --config service.json
//
// Exit status: 0 on success, 2 when a replay does not reproduce the log
// (changed workbook, diverging delta), 1 for every other failure.

#include <algorithm>
#include <cctype>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sheetgraph/codec.h"
#include "sheetgraph/config.h"
#include "sheetgraph/error.h"
#include "sheetgraph/service.h"
#include "sheetgraph/session.h"

namespace fs = std::filesystem;
using namespace sheetgraph;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << data;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

WorkbookFormat format_for(const std::string &path) {
  std::string ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".csv") return WorkbookFormat::kCsv;
  return WorkbookFormat::kXlsx;
}

struct Options {
  std::optional<std::string> config_path;
  std::vector<std::string> workbooks;
  std::string log;
  std::string out;
  std::string format;
  std::string epoch;
  std::string base_uri;
  std::string graph = "knowledge";
  std::vector<std::string> cells;
};

// Command-line flags win over the config file.
AppConfig effective_config(const Options &opt) {
  AppConfig config = load_config(opt.config_path);
  if (!opt.workbooks.empty()) config.workbook = opt.workbooks.front();
  if (!opt.log.empty()) config.log = opt.log;
  if (!opt.out.empty()) config.out = opt.out;
  if (!opt.format.empty()) config.format = parse_rdf_format(opt.format);
  if (!opt.epoch.empty()) config.epoch = opt.epoch;
  if (!opt.base_uri.empty()) config.base_uri = opt.base_uri;
  return config;
}

std::vector<std::string> workbook_paths(const Options &opt, const AppConfig &config) {
  if (!opt.workbooks.empty()) return opt.workbooks;
  if (!config.workbook.empty()) return {config.workbook};
  throw Error(ErrorCode::kParameter, "no workbook given (--workbook)", "workbook");
}

std::unique_ptr<Session> replay_session(const Options &opt, const AppConfig &config) {
  std::vector<std::string> bytes;
  for (const auto &path : workbook_paths(opt, config)) bytes.push_back(read_file(path));
  if (config.log.empty()) throw Error(ErrorCode::kParameter, "no session log given (--log)", "log");
  auto session = Session::replay(read_file(config.log), bytes, config.epoch);
  if (!opt.base_uri.empty() && opt.base_uri != session->base_uri()) {
    throw Error(ErrorCode::kReplay,
                "log was recorded with base URI " + session->base_uri() + ", not " + opt.base_uri, "base-uri");
  }
  return session;
}

int run_replay(const Options &opt) {
  AppConfig config = effective_config(opt);
  if (config.out.empty()) throw Error(ErrorCode::kParameter, "no output directory given (--out)", "out");
  auto session = replay_session(opt, config);
  fs::create_directories(config.out);
  fs::path out(config.out);
  for (GraphName graph : {GraphName::kMatching, GraphName::kKnowledge}) {
    std::string name(graph_name(graph));
    write_file(out / (name + ".nt"), session->export_graph(graph, RdfFormat::kNTriples));
    write_file(out / (name + ".ttl"), session->export_graph(graph, RdfFormat::kTurtle));
  }
  Json report = Json::object();
  if (auto last = session->last_instance_report()) report = encode(*last);
  write_file(out / "instance_report.json", report.dump(2) + "\n");
  std::cout << "matching: " << session->size(GraphName::kMatching)
            << " triples, knowledge: " << session->size(GraphName::kKnowledge) << " triples, written to "
            << out.string() << "\n";
  return 0;
}

int run_export(const Options &opt) {
  AppConfig config = effective_config(opt);
  auto session = replay_session(opt, config);
  std::string text = session->export_graph(parse_graph_name(opt.graph), config.format);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    write_file(config.out, text);
  }
  return 0;
}

// SHEET:ROW:COLUMN, 0-based; the sheet name may itself contain ':'.
CellRef parse_cell(const std::string &spec, const std::string &workbook_id) {
  std::size_t c2 = spec.rfind(':');
  std::size_t c1 = c2 == std::string::npos || c2 == 0 ? std::string::npos : spec.rfind(':', c2 - 1);
  if (c1 == std::string::npos) {
    throw Error(ErrorCode::kParameter, "cell '" + spec + "' is not SHEET:ROW:COLUMN", "cell");
  }
  auto number = [&](const std::string &text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
      throw Error(ErrorCode::kParameter, "cell '" + spec + "' has a bad row or column", "cell");
    }
    return static_cast<std::uint32_t>(std::stoul(text));
  };
  return {workbook_id, spec.substr(0, c1), number(spec.substr(c1 + 1, c2 - c1 - 1)), number(spec.substr(c2 + 1))};
}

int run_inspect(const Options &opt) {
  AppConfig config = effective_config(opt);
  auto session = replay_session(opt, config);
  auto workbooks = session->workbooks();
  if (workbooks.empty()) throw Error(ErrorCode::kLookup, "the log loads no workbook", "workbook");
  Selection selection;
  if (opt.cells.empty()) {
    for (const auto &wb : workbooks) {
      for (const Sheet &sheet : wb->sheets()) {
        for (const auto &[pos, cell] : sheet.cells()) selection.cells.push_back(cell.ref);
      }
    }
  } else {
    for (const auto &spec : opt.cells) selection.cells.push_back(parse_cell(spec, workbooks.front()->id()));
  }
  std::cout << session->inspect(selection, config.format);
  return 0;
}

struct KindCounts {
  std::size_t rows = 0, columns = 0, cells = 0, text = 0, numeric = 0, formula = 0;
};

int run_stats_report(const Options &opt) {
  AppConfig config = effective_config(opt);
  KindCounts total;
  std::ostringstream table;
  table << std::left << std::setw(24) << "sheet" << std::right << std::setw(8) << "rows" << std::setw(9)
        << "columns" << std::setw(8) << "cells" << std::setw(8) << "string" << std::setw(9) << "numeric"
        << std::setw(9) << "formula" << "\n";
  auto line = [&](const std::string &label, const KindCounts &k) {
    table << std::left << std::setw(24) << label << std::right << std::setw(8) << k.rows << std::setw(9)
          << k.columns << std::setw(8) << k.cells << std::setw(8) << k.text << std::setw(9) << k.numeric
          << std::setw(9) << k.formula << "\n";
  };
  for (const auto &path : workbook_paths(opt, config)) {
    Workbook wb = load_workbook(read_file(path), format_for(path));
    for (const Sheet &sheet : wb.sheets()) {
      KindCounts k;
      k.rows = sheet.row_count();
      k.columns = sheet.column_count();
      for (const auto &[pos, cell] : sheet.cells()) {
        switch (cell.kind()) {
          case CellKind::kText: ++k.text; break;
          case CellKind::kNumber:
          case CellKind::kDateSerial: ++k.numeric; break;
          case CellKind::kFormula: ++k.formula; break;
          case CellKind::kEmpty: continue;
        }
        ++k.cells;
      }
      line(sheet.name(), k);
      total.rows += k.rows;
      total.columns += k.columns;
      total.cells += k.cells;
      total.text += k.text;
      total.numeric += k.numeric;
      total.formula += k.formula;
    }
  }
  line("total", total);
  std::cout << table.str();
  return 0;
}

ApiService *g_service = nullptr;

extern "C" void on_signal(int) {
  if (g_service) g_service->stop();
}

int run_serve(const Options &opt, int port_flag) {
  AppConfig config = effective_config(opt);
  if (port_flag >= 0) config.port = port_flag;
  ApiService service(config);
  int port = service.bind(config.port);
  if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + config.host + ":" + std::to_string(config.port));
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on http://" << config.host << ":" << port << "/api/v1" << std::endl;
  service.serve();
  g_service = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spreadsheet annotation and knowledge graph construction"};
  app.require_subcommand(1);
  Options opt;
  std::string config_path;
  int port = -1;

  auto common = [&](CLI::App *cmd, bool needs_log) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--workbook", opt.workbooks, "workbook (.xlsx or .csv); repeat for several");
    if (needs_log) cmd->add_option("--log", opt.log, "session log (JSON lines)");
    cmd->add_option("--format", opt.format, "turtle or ntriples");
    cmd->add_option("--epoch", opt.epoch, "day zero for date serials, YYYY-MM-DD");
    cmd->add_option("--base-uri", opt.base_uri, "project namespace");
  };

  auto *replay = app.add_subcommand("replay", "replay a session log and write both graphs and the instance report");
  common(replay, true);
  replay->add_option("--out", opt.out, "output directory");

  auto *exp = app.add_subcommand("export", "replay a session log and print one graph");
  common(exp, true);
  exp->add_option("--graph", opt.graph, "matching or knowledge")->check(CLI::IsMember({"matching", "knowledge"}));
  exp->add_option("--out", opt.out, "output file (default stdout)");

  auto *inspect = app.add_subcommand("inspect", "print the annotations of cells after replay");
  common(inspect, true);
  inspect->add_option("--cell", opt.cells, "SHEET:ROW:COLUMN, 0-based; default all cells");

  auto *stats = app.add_subcommand("stats-report", "rows, columns and cell kinds per sheet");
  common(stats, false);

  auto *serve = app.add_subcommand("serve", "run the HTTP service");
  common(serve, false);
  serve->add_option("--port", port, "port (0 picks a free one)");

  CLI11_PARSE(app, argc, argv);
  if (!config_path.empty()) opt.config_path = config_path;

  try {
    if (*replay) return run_replay(opt);
    if (*exp) return run_export(opt);
    if (*inspect) return run_inspect(opt);
    if (*stats) return run_stats_report(opt);
    if (*serve) return run_serve(opt, port);
  } catch (const ParseError &e) {
    std::cerr << "sheetgraph: " << e.what();
    if (e.line()) std::cerr << " (line " << *e.line() << ")";
    std::cerr << "\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "sheetgraph: " << e.token() << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kReplay ? 2 : 1;
  } catch (const std::exception &e) {
    std::cerr << "sheetgraph: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
