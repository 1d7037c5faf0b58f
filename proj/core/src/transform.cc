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

#include "sheetgraph/transform.h"

#include <cctype>
#include <optional>

#include <boost/regex.hpp>

#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"

namespace sheetgraph {

namespace {

enum class Op { kSplit, kTrim, kLower, kReplace, kRegexAll, kList };

struct ListItem {
  bool self = false;  // '$'
  std::string text;
};

struct Stage {
  Op op;
  std::vector<std::string> args;
  std::vector<ListItem> items;
  std::optional<boost::regex> regex;
};

[[noreturn]] void syntax(const std::string &message, std::size_t pos) {
  throw Error(ErrorCode::kParameter,
              "transform: " + message + " at offset " + std::to_string(pos), "transform");
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::vector<Stage> parse() {
    std::vector<Stage> stages;
    skip_ws();
    if (pos_ == src_.size()) return stages;
    for (;;) {
      stages.push_back(stage());
      skip_ws();
      if (pos_ == src_.size()) break;
      if (src_[pos_] != '|') syntax("expected '|'", pos_);
      ++pos_;
      skip_ws();
    }
    return stages;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!eat(ch)) syntax(std::string("expected '") + ch + "'", pos_);
  }

  std::string string_literal() {
    skip_ws();
    if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\'')) {
      syntax("expected string literal", pos_);
    }
    char quote = src_[pos_++];
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != quote) {
      char ch = src_[pos_++];
      if (ch != '\\') {
        out += ch;
        continue;
      }
      if (pos_ >= src_.size()) break;
      char esc = src_[pos_++];
      switch (esc) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case '\\': out += '\\'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        default:
          // Unknown escapes pass through so regex classes like \d survive.
          out += '\\';
          out += esc;
      }
    }
    if (pos_ >= src_.size()) syntax("unterminated string literal", pos_);
    ++pos_;
    return out;
  }

  Stage stage() {
    std::size_t start = pos_;
    if (eat('[')) {
      Stage s{Op::kList, {}, {}, std::nullopt};
      if (eat(']')) return s;
      do {
        if (eat('$')) {
          s.items.push_back({true, {}});
        } else {
          s.items.push_back({false, string_literal()});
        }
      } while (eat(','));
      expect(']');
      return s;
    }
    std::string name;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      name += src_[pos_++];
    }
    if (name.empty()) syntax("expected operation", start);
    expect('(');
    std::vector<std::string> args;
    if (!eat(')')) {
      do {
        args.push_back(string_literal());
      } while (eat(','));
      expect(')');
    }

    Stage s;
    std::size_t arity = 0;
    if (name == "split") {
      s.op = Op::kSplit;
      arity = 1;
    } else if (name == "trim") {
      s.op = Op::kTrim;
    } else if (name == "lower") {
      s.op = Op::kLower;
    } else if (name == "replace") {
      s.op = Op::kReplace;
      arity = 2;
    } else if (name == "regex_all") {
      s.op = Op::kRegexAll;
      arity = 1;
    } else {
      syntax("unknown operation '" + name + "'", start);
    }
    if (args.size() != arity) {
      syntax(name + " takes " + std::to_string(arity) + " argument(s)", start);
    }
    if (s.op == Op::kSplit && args[0].empty()) syntax("split separator is empty", start);
    if (s.op == Op::kReplace || s.op == Op::kRegexAll) {
      try {
        s.regex.emplace(args[0], boost::regex::perl);
      } catch (const boost::regex_error &e) {
        syntax("invalid regex '" + args[0] + "': " + e.what(), start);
      }
    }
    s.args = std::move(args);
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Budget {
 public:
  explicit Budget(std::size_t limit) : left_(limit) {}
  void charge() {
    if (left_ == 0) throw Error(ErrorCode::kTransform, "transform step budget exhausted");
    --left_;
  }

 private:
  std::size_t left_;
};

void run_stage(const Stage &stage, const std::string &in, std::vector<std::string> &out,
               Budget &budget) {
  auto emit = [&](std::string value) {
    budget.charge();
    out.push_back(std::move(value));
  };
  switch (stage.op) {
    case Op::kSplit: {
      const std::string &sep = stage.args[0];
      std::size_t begin = 0;
      for (;;) {
        std::size_t at = in.find(sep, begin);
        if (at == std::string::npos) {
          emit(in.substr(begin));
          return;
        }
        emit(in.substr(begin, at - begin));
        begin = at + sep.size();
      }
    }
    case Op::kTrim:
      emit(trim(in));
      return;
    case Op::kLower: {
      std::string lowered = in;
      for (char &ch : lowered) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      emit(std::move(lowered));
      return;
    }
    case Op::kReplace:
      budget.charge();
      emit(boost::regex_replace(in, *stage.regex, stage.args[1],
                                boost::format_perl));
      return;
    case Op::kRegexAll: {
      int group = stage.regex->mark_count() > 0 ? 1 : 0;
      for (boost::sregex_iterator it(in.begin(), in.end(), *stage.regex), end; it != end; ++it) {
        budget.charge();
        emit((*it)[group].str());
      }
      return;
    }
    case Op::kList:
      for (const ListItem &item : stage.items) emit(item.self ? in : item.text);
      return;
  }
}

}  // namespace

struct TransformExpr::Program {
  std::vector<Stage> stages;
};

TransformExpr TransformExpr::compile(std::string_view source) {
  TransformExpr expr;
  expr.source_ = std::string(source);
  auto program = std::make_shared<Program>();
  program->stages = Parser(source).parse();
  expr.program_ = std::move(program);
  return expr;
}

std::vector<std::string> TransformExpr::apply(std::string_view input, std::size_t budget) const {
  Budget steps(budget);
  std::vector<std::string> current{std::string(input)};
  if (!program_) return current;
  try {
    for (const Stage &stage : program_->stages) {
      std::vector<std::string> next;
      for (const std::string &element : current) {
        steps.charge();
        run_stage(stage, element, next, steps);
      }
      current = std::move(next);
    }
  } catch (const std::runtime_error &e) {
    if (dynamic_cast<const Error *>(&e)) throw;
    // boost::regex throws on catastrophic backtracking.
    throw Error(ErrorCode::kTransform, std::string("transform failed: ") + e.what());
  }
  return current;
}

}  // namespace sheetgraph
