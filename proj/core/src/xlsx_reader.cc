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

// SpreadsheetML reader: workbook -> sheets, shared strings with rich-text
// runs, cell styles (number formats and font strike-through).

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "readers.h"
#include "sheetgraph/error.h"
#include "zip_archive.h"

namespace sheetgraph::internal {
namespace {

constexpr std::uint32_t kMaxRows = 1048576;
constexpr std::uint32_t kMaxColumns = 16384;

using Attributes = std::vector<std::pair<std::string, std::string>>;

const std::string *find_attr(const Attributes &attrs, std::string_view name) {
  for (const auto &[key, value] : attrs) {
    if (key == name) return &value;
  }
  return nullptr;
}

bool truthy_val(const Attributes &attrs) {
  const std::string *val = find_attr(attrs, "val");
  return val == nullptr || (*val != "0" && *val != "false");
}

// SAX callbacks with namespace prefixes stripped from element and
// attribute names.
class XmlHandler {
 public:
  virtual ~XmlHandler() = default;
  virtual void start(std::string_view name, const Attributes &attrs) = 0;
  virtual void end(std::string_view name) = 0;
  virtual void text(std::string_view) {}
};

std::string_view local_name(const XML_Char *qualified) {
  std::string_view name(qualified);
  auto bar = name.rfind('|');
  return bar == std::string_view::npos ? name : name.substr(bar + 1);
}

void parse_xml(std::string_view document, const std::string &member, XmlHandler &handler) {
  struct ParserDeleter {
    void operator()(XML_Parser p) const { XML_ParserFree(p); }
  };
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreateNS(nullptr, '|'));
  if (!parser) throw ParseError("xml: cannot create parser", std::nullopt);
  XML_SetUserData(parser.get(), &handler);
  XML_SetElementHandler(
      parser.get(),
      [](void *data, const XML_Char *name, const XML_Char **atts) {
        Attributes attrs;
        for (int i = 0; atts[i] != nullptr; i += 2) {
          attrs.emplace_back(std::string(local_name(atts[i])), atts[i + 1]);
        }
        static_cast<XmlHandler *>(data)->start(local_name(name), attrs);
      },
      [](void *data, const XML_Char *name) {
        static_cast<XmlHandler *>(data)->end(local_name(name));
      });
  XML_SetCharacterDataHandler(parser.get(), [](void *data, const XML_Char *s, int len) {
    static_cast<XmlHandler *>(data)->text(std::string_view(s, static_cast<std::size_t>(len)));
  });
  if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), 1) ==
      XML_STATUS_ERROR) {
    auto offset = static_cast<std::size_t>(XML_GetCurrentByteIndex(parser.get()));
    throw ParseError("xml: " + member + ": " +
                         XML_ErrorString(XML_GetErrorCode(parser.get())),
                     offset, static_cast<std::size_t>(XML_GetCurrentLineNumber(parser.get())));
  }
}

// A run whose strike flag is unset inherits the cell font.
struct RunSpec {
  std::string text;
  std::optional<bool> struck;
};
using RichText = std::vector<RunSpec>;

// Collects <si>/<is> rich text: plain <t>, <r><rPr/><t/></r>, skipping
// phonetic <rPh> runs.
class RichTextBuilder {
 public:
  void start(std::string_view name, const Attributes &attrs) {
    if (name == "rPh") {
      ++phonetic_depth_;
    } else if (phonetic_depth_ > 0) {
      return;
    } else if (name == "r") {
      in_run_ = true;
      run_ = RunSpec{};
    } else if (name == "rPr" && in_run_) {
      run_.struck = false;
    } else if (name == "strike" && in_run_) {
      run_.struck = truthy_val(attrs);
    } else if (name == "t") {
      in_text_ = true;
      if (!in_run_) runs_.push_back(RunSpec{});
    }
  }

  void end(std::string_view name) {
    if (name == "rPh") {
      --phonetic_depth_;
    } else if (phonetic_depth_ > 0) {
      return;
    } else if (name == "r") {
      in_run_ = false;
      runs_.push_back(std::move(run_));
    } else if (name == "t") {
      in_text_ = false;
    }
  }

  void text(std::string_view s) {
    if (!in_text_ || phonetic_depth_ > 0) return;
    if (in_run_) {
      run_.text.append(s);
    } else {
      runs_.back().text.append(s);
    }
  }

  RichText take() {
    RichText out = std::move(runs_);
    runs_.clear();
    return out;
  }

 private:
  RichText runs_;
  RunSpec run_;
  bool in_run_ = false;
  bool in_text_ = false;
  int phonetic_depth_ = 0;
};

class SharedStringsHandler : public XmlHandler {
 public:
  void start(std::string_view name, const Attributes &attrs) override {
    if (name == "si") {
      in_item_ = true;
    } else if (in_item_) {
      builder_.start(name, attrs);
    }
  }
  void end(std::string_view name) override {
    if (name == "si") {
      in_item_ = false;
      strings.push_back(builder_.take());
    } else if (in_item_) {
      builder_.end(name);
    }
  }
  void text(std::string_view s) override {
    if (in_item_) builder_.text(s);
  }

  std::vector<RichText> strings;

 private:
  RichTextBuilder builder_;
  bool in_item_ = false;
};

struct CellStyle {
  int num_fmt_id = 0;
  int font_id = 0;
};

class StylesHandler : public XmlHandler {
 public:
  void start(std::string_view name, const Attributes &attrs) override {
    if (name == "numFmt") {
      const std::string *id = find_attr(attrs, "numFmtId");
      const std::string *code = find_attr(attrs, "formatCode");
      if (id && code) num_formats[std::atoi(id->c_str())] = *code;
    } else if (name == "fonts") {
      in_fonts_ = true;
    } else if (name == "font" && in_fonts_) {
      font_strike.push_back(false);
    } else if (name == "strike" && in_fonts_ && !font_strike.empty()) {
      font_strike.back() = truthy_val(attrs);
    } else if (name == "cellXfs") {
      in_cell_xfs_ = true;
    } else if (name == "xf" && in_cell_xfs_) {
      CellStyle style;
      if (const std::string *v = find_attr(attrs, "numFmtId")) style.num_fmt_id = std::atoi(v->c_str());
      if (const std::string *v = find_attr(attrs, "fontId")) style.font_id = std::atoi(v->c_str());
      cell_styles.push_back(style);
    }
  }
  void end(std::string_view name) override {
    if (name == "fonts") in_fonts_ = false;
    if (name == "cellXfs") in_cell_xfs_ = false;
  }

  std::map<int, std::string> num_formats;
  std::vector<bool> font_strike;
  std::vector<CellStyle> cell_styles;

 private:
  bool in_fonts_ = false;
  bool in_cell_xfs_ = false;
};

struct SheetEntry {
  std::string name;
  std::string relationship_id;
};

class WorkbookHandler : public XmlHandler {
 public:
  void start(std::string_view name, const Attributes &attrs) override {
    if (name != "sheet") return;
    const std::string *sheet_name = find_attr(attrs, "name");
    const std::string *rid = find_attr(attrs, "id");
    if (sheet_name && rid) sheets.push_back({*sheet_name, *rid});
  }
  void end(std::string_view) override {}

  std::vector<SheetEntry> sheets;
};

struct Relationship {
  std::string type;
  std::string target;
};

class RelationshipsHandler : public XmlHandler {
 public:
  void start(std::string_view name, const Attributes &attrs) override {
    if (name != "Relationship") return;
    const std::string *id = find_attr(attrs, "Id");
    const std::string *type = find_attr(attrs, "Type");
    const std::string *target = find_attr(attrs, "Target");
    if (id && target) rels[*id] = {type ? *type : std::string(), *target};
  }
  void end(std::string_view) override {}

  std::map<std::string, Relationship> rels;
};

// Resolves a relationship target relative to the directory of the source
// part ("xl/"), handling absolute targets and ".." segments.
std::string resolve_target(const std::string &base_dir, const std::string &target) {
  std::string joined = target.starts_with('/') ? target.substr(1) : base_dir + target;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= joined.size()) {
    std::size_t slash = joined.find('/', start);
    if (slash == std::string::npos) slash = joined.size();
    std::string part = joined.substr(start, slash - start);
    if (part == "..") {
      if (!parts.empty()) parts.pop_back();
    } else if (!part.empty() && part != ".") {
      parts.push_back(part);
    }
    start = slash + 1;
  }
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty()) out += '/';
    out += p;
  }
  return out;
}

std::string rels_path_for(const std::string &part) {
  auto slash = part.rfind('/');
  std::string dir = slash == std::string::npos ? "" : part.substr(0, slash + 1);
  std::string file = slash == std::string::npos ? part : part.substr(slash + 1);
  return dir + "_rels/" + file + ".rels";
}

std::string dir_of(const std::string &part) {
  auto slash = part.rfind('/');
  return slash == std::string::npos ? "" : part.substr(0, slash + 1);
}

bool ends_with_type(const std::string &type, std::string_view suffix) {
  return type.size() >= suffix.size() && type.compare(type.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "AB12" -> (row 11, column 27). Returns false on malformed references.
bool parse_a1(std::string_view ref, std::uint32_t &row, std::uint32_t &column) {
  std::size_t i = 0;
  std::uint64_t col = 0;
  while (i < ref.size() && std::isalpha(static_cast<unsigned char>(ref[i]))) {
    col = col * 26 + static_cast<std::uint64_t>(std::toupper(static_cast<unsigned char>(ref[i])) - 'A' + 1);
    if (col > kMaxColumns) return false;
    ++i;
  }
  if (i == 0 || i == ref.size()) return false;
  std::uint64_t r = 0;
  for (; i < ref.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(ref[i]))) return false;
    r = r * 10 + static_cast<std::uint64_t>(ref[i] - '0');
    if (r > kMaxRows) return false;
  }
  if (r == 0) return false;
  row = static_cast<std::uint32_t>(r - 1);
  column = static_cast<std::uint32_t>(col - 1);
  return true;
}

struct StyleTable {
  const StylesHandler &styles;

  const CellStyle *style(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= styles.cell_styles.size()) return nullptr;
    return &styles.cell_styles[static_cast<std::size_t>(index)];
  }
  bool is_date(int index) const {
    const CellStyle *s = style(index);
    if (!s) return false;
    auto it = styles.num_formats.find(s->num_fmt_id);
    return is_date_format(s->num_fmt_id, it == styles.num_formats.end() ? "" : it->second);
  }
  bool font_struck(int index) const {
    const CellStyle *s = style(index);
    if (!s || s->font_id < 0 || static_cast<std::size_t>(s->font_id) >= styles.font_strike.size()) {
      return false;
    }
    return styles.font_strike[static_cast<std::size_t>(s->font_id)];
  }
};

class WorksheetHandler : public XmlHandler {
 public:
  WorksheetHandler(Sheet &sheet, std::string workbook_id, const std::vector<RichText> &shared,
                   const StyleTable &styles, std::string member)
      : sheet_(sheet),
        workbook_id_(std::move(workbook_id)),
        shared_(shared),
        styles_(styles),
        member_(std::move(member)) {}

  void start(std::string_view name, const Attributes &attrs) override {
    if (in_inline_) {
      inline_.start(name, attrs);
      return;
    }
    if (name == "row") {
      if (const std::string *r = find_attr(attrs, "r")) {
        long value = std::atol(r->c_str());
        if (value < 1 || value > static_cast<long>(kMaxRows)) fail("bad row index " + *r);
        row_ = static_cast<std::uint32_t>(value - 1);
      } else {
        row_ = next_row_;
      }
      next_row_ = row_ + 1;
      next_column_ = 0;
    } else if (name == "c") {
      cell_ = PendingCell{};
      if (const std::string *r = find_attr(attrs, "r")) {
        std::uint32_t row = 0;
        if (!parse_a1(*r, row, cell_.column)) fail("bad cell reference " + *r);
        cell_.row = row;
      } else {
        cell_.row = row_;
        cell_.column = next_column_;
      }
      next_column_ = cell_.column + 1;
      if (const std::string *t = find_attr(attrs, "t")) cell_.type = *t;
      if (const std::string *s = find_attr(attrs, "s")) cell_.style = std::atoi(s->c_str());
      in_cell_ = true;
    } else if (in_cell_ && name == "v") {
      capture_ = &cell_.value;
    } else if (in_cell_ && name == "f") {
      cell_.has_formula = true;
      capture_ = &cell_.formula;
    } else if (in_cell_ && name == "is") {
      in_inline_ = true;
    }
  }

  void end(std::string_view name) override {
    if (in_inline_) {
      if (name == "is") {
        in_inline_ = false;
        cell_.inline_text = inline_.take();
        cell_.has_inline = true;
      } else {
        inline_.end(name);
      }
      return;
    }
    if (name == "v" || name == "f") {
      capture_ = nullptr;
    } else if (name == "c") {
      in_cell_ = false;
      finish_cell();
    }
  }

  void text(std::string_view s) override {
    if (in_inline_) {
      inline_.text(s);
    } else if (capture_) {
      capture_->append(s);
    }
  }

 private:
  struct PendingCell {
    std::uint32_t row = 0;
    std::uint32_t column = 0;
    std::string type;
    int style = 0;
    std::string value;
    std::string formula;
    bool has_formula = false;
    RichText inline_text;
    bool has_inline = false;
  };

  [[noreturn]] void fail(const std::string &message) const {
    throw ParseError("xlsx: " + member_ + ": " + message, std::nullopt);
  }

  void put_text(const RichText &rich) {
    bool cell_struck = styles_.font_struck(cell_.style);
    std::vector<TextRun> runs;
    for (const auto &spec : rich) {
      runs.push_back({spec.text, spec.struck.value_or(cell_struck)});
    }
    runs = normalize_runs(std::move(runs));
    std::string text;
    for (const auto &run : runs) text += run.text;
    if (text.empty()) return;
    Cell cell{ref(), TextValue{std::move(text)}, std::move(runs)};
    sheet_.put(std::move(cell));
  }

  void put_plain_text(std::string text) { put_text(RichText{{std::move(text), std::nullopt}}); }

  CellRef ref() const { return CellRef{workbook_id_, sheet_.name(), cell_.row, cell_.column}; }

  void finish_cell() {
    if (cell_.has_formula) {
      sheet_.put(Cell{ref(), FormulaValue{cell_.formula}, {}});
      return;
    }
    const std::string &type = cell_.type;
    if (type == "s") {
      if (cell_.value.empty()) return;
      long index = std::atol(cell_.value.c_str());
      if (index < 0 || static_cast<std::size_t>(index) >= shared_.size()) {
        fail("shared string index out of range: " + cell_.value);
      }
      put_text(shared_[static_cast<std::size_t>(index)]);
    } else if (type == "inlineStr") {
      if (cell_.has_inline) put_text(cell_.inline_text);
    } else if (type == "str" || type == "e" || type == "d") {
      put_plain_text(cell_.value);
    } else if (type == "b") {
      if (!cell_.value.empty()) put_plain_text(cell_.value == "1" ? "TRUE" : "FALSE");
    } else if (type.empty() || type == "n") {
      if (cell_.value.empty()) return;
      double number = 0;
      const char *begin = cell_.value.data();
      const char *end = begin + cell_.value.size();
      auto [ptr, ec] = std::from_chars(begin, end, number);
      if (ec != std::errc() || ptr != end) fail("bad numeric value " + cell_.value);
      if (styles_.is_date(cell_.style)) {
        sheet_.put(Cell{ref(), DateSerialValue{static_cast<std::int64_t>(std::floor(number))}, {}});
      } else {
        sheet_.put(Cell{ref(), NumberValue{number}, {}});
      }
    } else {
      fail("unknown cell type " + type);
    }
  }

  Sheet &sheet_;
  std::string workbook_id_;
  const std::vector<RichText> &shared_;
  const StyleTable &styles_;
  std::string member_;

  std::uint32_t row_ = 0;
  std::uint32_t next_row_ = 0;
  std::uint32_t next_column_ = 0;
  bool in_cell_ = false;
  bool in_inline_ = false;
  PendingCell cell_;
  std::string *capture_ = nullptr;
  RichTextBuilder inline_;
};

}  // namespace

bool is_date_format(int builtin_id, std::string_view format_code) {
  if ((builtin_id >= 14 && builtin_id <= 22) || (builtin_id >= 27 && builtin_id <= 36) ||
      (builtin_id >= 45 && builtin_id <= 47) || (builtin_id >= 50 && builtin_id <= 58)) {
    return true;
  }
  if (format_code.empty()) return false;
  // Only the first (positive) section decides; quoted literals, escaped
  // characters and bracketed modifiers carry no date tokens.
  bool has_y = false, has_d = false, has_m = false, has_h = false, has_s = false;
  for (std::size_t i = 0; i < format_code.size(); ++i) {
    char c = format_code[i];
    if (c == ';') break;
    if (c == '"') {
      auto close = format_code.find('"', i + 1);
      if (close == std::string_view::npos) break;
      i = close;
      continue;
    }
    if (c == '\\' || c == '_' || c == '*') {
      ++i;
      continue;
    }
    if (c == '[') {
      auto close = format_code.find(']', i + 1);
      if (close == std::string_view::npos) break;
      i = close;
      continue;
    }
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'y': has_y = true; break;
      case 'd': has_d = true; break;
      case 'm': has_m = true; break;
      case 'h': has_h = true; break;
      case 's': has_s = true; break;
      default: break;
    }
  }
  return has_y || has_d || (has_m && !has_h && !has_s);
}

std::vector<Sheet> read_xlsx(std::string_view bytes, const std::string &workbook_id) {
  ZipArchive zip(bytes);

  std::string workbook_part = "xl/workbook.xml";
  if (zip.contains("_rels/.rels")) {
    RelationshipsHandler root;
    parse_xml(zip.read("_rels/.rels"), "_rels/.rels", root);
    for (const auto &[id, rel] : root.rels) {
      if (ends_with_type(rel.type, "/officeDocument")) workbook_part = resolve_target("", rel.target);
    }
  }
  if (!zip.contains(workbook_part)) {
    throw ParseError("xlsx: workbook part not found: " + workbook_part, std::nullopt);
  }
  const std::string base_dir = dir_of(workbook_part);

  WorkbookHandler workbook;
  parse_xml(zip.read(workbook_part), workbook_part, workbook);

  RelationshipsHandler rels;
  std::string rels_part = rels_path_for(workbook_part);
  if (zip.contains(rels_part)) parse_xml(zip.read(rels_part), rels_part, rels);

  std::string shared_part = base_dir + "sharedStrings.xml";
  std::string styles_part = base_dir + "styles.xml";
  for (const auto &[id, rel] : rels.rels) {
    if (ends_with_type(rel.type, "/sharedStrings")) shared_part = resolve_target(base_dir, rel.target);
    if (ends_with_type(rel.type, "/styles")) styles_part = resolve_target(base_dir, rel.target);
  }

  SharedStringsHandler shared;
  if (zip.contains(shared_part)) parse_xml(zip.read(shared_part), shared_part, shared);
  StylesHandler styles;
  if (zip.contains(styles_part)) parse_xml(zip.read(styles_part), styles_part, styles);
  StyleTable style_table{styles};

  std::vector<Sheet> sheets;
  std::set<std::string> names;
  for (const auto &entry : workbook.sheets) {
    if (!names.insert(entry.name).second) {
      throw ParseError("xlsx: duplicate sheet name " + entry.name, std::nullopt);
    }
    auto rel = rels.rels.find(entry.relationship_id);
    if (rel == rels.rels.end()) {
      throw ParseError("xlsx: no relationship " + entry.relationship_id + " for sheet " + entry.name,
                       std::nullopt);
    }
    // Chartsheets and dialog sheets carry no cell data.
    if (!ends_with_type(rel->second.type, "/worksheet") && !rel->second.type.empty()) continue;
    std::string part = resolve_target(base_dir, rel->second.target);
    Sheet sheet(entry.name);
    WorksheetHandler handler(sheet, workbook_id, shared.strings, style_table, part);
    parse_xml(zip.read(part), part, handler);
    sheets.push_back(std::move(sheet));
  }
  if (sheets.empty()) sheets.emplace_back("Sheet1");
  return sheets;
}

}  // namespace sheetgraph::internal
