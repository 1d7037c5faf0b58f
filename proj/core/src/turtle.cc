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

// Turtle writer and a parser for the Turtle subset without blank nodes,
// collections or language tags. The same parser reads N-Triples in strict
// mode.

#include <cctype>
#include <map>

#include "rdf_text.h"
#include "sheetgraph/error.h"
#include "sheetgraph/uri.h"
#include "sheetgraph/vocabulary.h"

namespace sheetgraph::internal {
namespace {

bool is_simple_local(std::string_view local) {
  if (local.empty()) return false;
  auto first = static_cast<unsigned char>(local[0]);
  if (!std::isalpha(first) && first != '_') return false;
  for (char ch : local) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

class TermWriter {
 public:
  explicit TermWriter(const std::vector<PrefixBinding> &prefixes) : prefixes_(prefixes) {}

  std::string resource(const Resource &r) const {
    const PrefixBinding *best = nullptr;
    for (const auto &binding : prefixes_) {
      if (r.uri().starts_with(binding.ns) && (!best || binding.ns.size() > best->ns.size())) {
        std::string_view local = std::string_view(r.uri()).substr(binding.ns.size());
        if (is_simple_local(local)) best = &binding;
      }
    }
    if (!best) return "<" + r.uri() + ">";
    return best->prefix + ":" + r.uri().substr(best->ns.size());
  }

  std::string term(const Term &t) const {
    if (const Resource *r = as_resource(t)) return resource(*r);
    const Literal &lit = std::get<Literal>(t);
    switch (lit.datatype()) {
      case Datatype::kString:
        return "\"" + escape_string(lit.lexical()) + "\"";
      case Datatype::kInteger:
        return lit.lexical();
      case Datatype::kBoolean:
        if (lit.lexical() == "true" || lit.lexical() == "false") return lit.lexical();
        break;
      default:
        break;
    }
    return "\"" + escape_string(lit.lexical()) + "\"^^" + resource(Resource(datatype_uri(lit.datatype())));
  }

 private:
  const std::vector<PrefixBinding> &prefixes_;
};

void append_utf8(std::string &out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view doc, bool ntriples) : doc_(doc), ntriples_(ntriples) {}

  Graph run() {
    skip_space();
    while (!at_end()) {
      statement();
      skip_space();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string &message) const {
    throw ParseError(std::string(ntriples_ ? "n-triples: " : "turtle: ") + message, pos_, line_);
  }

  bool at_end() const { return pos_ >= doc_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < doc_.size() ? doc_[pos_ + ahead] : '\0';
  }
  char next() {
    char c = doc_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }
  bool lookahead(std::string_view word) const { return doc_.substr(pos_).starts_with(word); }
  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    next();
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        next();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') next();
      } else {
        break;
      }
    }
  }

  bool keyword(std::string_view word) {
    if (doc_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(doc_[pos_ + i])) != word[i]) return false;
    }
    char after = pos_ + word.size() < doc_.size() ? doc_[pos_ + word.size()] : ' ';
    if (std::isalnum(static_cast<unsigned char>(after))) return false;
    pos_ += word.size();
    return true;
  }

  void statement() {
    if (!ntriples_) {
      if (peek() == '@') {
        next();
        if (keyword("prefix")) {
          prefix_decl();
          skip_space();
          expect('.');
          return;
        }
        if (keyword("base")) fail("@base is not supported");
        fail("unknown directive");
      }
      if (keyword("prefix")) {
        prefix_decl();
        return;
      }
      if (keyword("base")) fail("BASE is not supported");
    }
    Resource subject = iri_or_pname("subject");
    skip_space();
    predicate_object_list(subject);
    skip_space();
    expect('.');
  }

  void prefix_decl() {
    skip_space();
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = next();
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
        fail("bad prefix name");
      }
      prefix += c;
    }
    expect(':');
    skip_space();
    if (peek() != '<') fail("expected IRI in prefix declaration");
    prefixes_[prefix] = iriref();
  }

  void predicate_object_list(const Resource &subject) {
    while (true) {
      Resource predicate;
      if (!ntriples_ && peek() == 'a' && (std::isspace(static_cast<unsigned char>(peek(1))))) {
        next();
        predicate = vocab::rdf_type();
      } else {
        predicate = iri_or_pname("predicate");
      }
      skip_space();
      while (true) {
        graph_.add(Triple{subject, predicate, object()});
        skip_space();
        if (ntriples_ || peek() != ',') break;
        next();
        skip_space();
      }
      if (ntriples_ || peek() != ';') return;
      // Repeated and trailing semicolons are legal.
      while (peek() == ';') {
        next();
        skip_space();
      }
      if (peek() == '.' || peek() == ']') return;
    }
  }

  Term object() {
    char c = peek();
    if (c == '<') return Resource(checked_uri(iriref()));
    if (c == '"' || (!ntriples_ && c == '\'')) return literal();
    if (c == '_' && peek(1) == ':') fail("blank nodes are not supported");
    if (c == '[') fail("blank nodes are not supported");
    if (c == '(') fail("collections are not supported");
    if (ntriples_) fail("expected IRI or literal");
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) return number();
    if (keyword("true")) return Literal("true", Datatype::kBoolean);
    if (keyword("false")) return Literal("false", Datatype::kBoolean);
    return pname();
  }

  Literal number() {
    std::string text;
    if (peek() == '+' || peek() == '-') text += next();
    bool dot = false;
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        text += next();
      } else if (c == '.' && !dot && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        text += next();
      } else {
        break;
      }
    }
    if (peek() == 'e' || peek() == 'E') fail("xsd:double literals are not supported");
    if (text.empty() || text == "+" || text == "-") fail("bad numeric literal");
    return Literal(text, dot ? Datatype::kDecimal : Datatype::kInteger);
  }

  Literal literal() {
    std::string lexical = string_body();
    if (peek() == '@') fail("language-tagged literals are not supported");
    if (peek() == '^' && peek(1) == '^') {
      next();
      next();
      Resource dt = peek() == '<' ? Resource(checked_uri(iriref())) : pname();
      auto type = datatype_from_uri(dt.uri());
      if (!type) fail("unsupported datatype <" + dt.uri() + ">");
      if (!valid_lexical(lexical, *type)) fail("invalid lexical form '" + lexical + "'");
      return Literal(std::move(lexical), *type);
    }
    return Literal::string(std::move(lexical));
  }

  std::string string_body() {
    char quote = next();
    bool long_form = !ntriples_ && peek() == quote && peek(1) == quote;
    if (long_form) {
      next();
      next();
    }
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      char c = peek();
      if (c == quote) {
        if (!long_form) {
          next();
          return out;
        }
        if (peek(1) == quote && peek(2) == quote) {
          next();
          next();
          next();
          return out;
        }
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("newline in string literal");
      next();
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("dangling escape");
      char e = next();
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, hex_escape(4)); break;
        case 'U': append_utf8(out, hex_escape(8)); break;
        default: fail(std::string("bad escape \\") + e);
      }
    }
  }

  std::uint32_t hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad \\u escape");
      char c = next();
      cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                    ? c - '0'
                                                    : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    }
    if (cp > 0x10FFFF) fail("code point out of range");
    return cp;
  }

  std::string iriref() {
    expect('<');
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      char c = next();
      if (c == '>') return out;
      if (c == '\\') {
        char e = at_end() ? '\0' : next();
        if (e == 'u') {
          append_utf8(out, hex_escape(4));
        } else if (e == 'U') {
          append_utf8(out, hex_escape(8));
        } else {
          fail("bad escape in IRI");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20) fail("illegal character in IRI");
      out += c;
    }
  }

  std::string checked_uri(std::string uri) {
    if (!is_absolute_uri(uri)) fail("relative or malformed IRI <" + uri + ">");
    return uri;
  }

  Resource iri_or_pname(const char *what) {
    if (peek() == '<') return Resource(checked_uri(iriref()));
    if (ntriples_) fail(std::string("expected IRI for ") + what);
    if (peek() == '_' && peek(1) == ':') fail("blank nodes are not supported");
    if (peek() == '[') fail("blank nodes are not supported");
    return pname();
  }

  Resource pname() {
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
      prefix += next();
    }
    expect(':');
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    std::string local;
    while (!at_end()) {
      char c = peek();
      if (c == '\\') {
        next();
        if (at_end()) fail("dangling escape");
        local += next();
        continue;
      }
      bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' ||
                c == '%' || static_cast<unsigned char>(c) >= 0x80;
      // A dot belongs to the local name only when more name characters follow.
      if (c == '.') {
        char after = peek(1);
        ok = std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == '-' ||
             after == ':' || after == '%';
      }
      if (!ok) break;
      local += next();
    }
    return Resource(checked_uri(it->second + local));
  }

  std::string_view doc_;
  bool ntriples_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::string> prefixes_;
  Graph graph_;
};

}  // namespace

std::string serialize_turtle(const Graph &graph, const std::vector<PrefixBinding> &prefixes) {
  TermWriter writer(prefixes);
  std::string out;
  for (const auto &binding : prefixes) {
    out += "@prefix " + binding.prefix + ": <" + binding.ns + "> .\n";
  }
  const auto &triples = graph.triples();
  auto it = triples.begin();
  while (it != triples.end()) {
    const Resource &subject = it->subject;
    out += "\n" + writer.resource(subject);
    bool first_predicate = true;
    while (it != triples.end() && it->subject == subject) {
      const Resource &predicate = it->predicate;
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      out += predicate == vocab::rdf_type() ? "a" : writer.resource(predicate);
      bool first_object = true;
      while (it != triples.end() && it->subject == subject && it->predicate == predicate) {
        out += first_object ? " " : " , ";
        first_object = false;
        out += writer.term(it->object);
        ++it;
      }
    }
    out += " .\n";
  }
  return out;
}

Graph parse_turtle_family(std::string_view document, bool ntriples_only) {
  try {
    return Parser(document, ntriples_only).run();
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(e.what(), std::nullopt);
  }
}

}  // namespace sheetgraph::internal
