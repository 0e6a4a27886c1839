/*
 * Copyright (c) 2026, The lio authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include "lio/lexer.hpp"

#include <array>
#include <cctype>

namespace lio {

namespace {

constexpr std::array<std::string_view, 22> kKeywords = {
    "let",        "in",         "fn",      "if",       "then",          "else",
    "try",        "catch",      "true",    "false",    "label",         "unlabel",
    "labelOf",    "toLabeled",  "getLabel", "getClearance", "lowerClearance", "newRef",
    "readRef",    "writeRef",   "throw",   "secret"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_whitespace();
      if (at_end()) {
        out.push_back(Token{TokenKind::End, "", pos(), 0, "", {}});
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  bool at_end() const { return offset_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
  }
  SourcePos pos() const { return SourcePos{line_, column_}; }

  char advance() {
    char c = src_[offset_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  Token next_token() {
    SourcePos start = pos();
    std::size_t start_offset = offset_;
    char c = peek();

    if (std::isdigit(static_cast<unsigned char>(c))) return lex_int(start, start_offset);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_word(start, start_offset);
    if (c == '"') return lex_string(start, start_offset);
    if (c == '<' && (peek(1) == '{' || peek(1) == '*')) return lex_label(start, start_offset);
    return lex_punct(start, start_offset);
  }

  Token lex_int(SourcePos start, std::size_t start_offset) {
    std::uint64_t acc = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = acc * 10 + static_cast<std::uint64_t>(advance() - '0');  // wraps on overflow
    }
    Token t{TokenKind::IntLit, text_since(start_offset), start, 0, "", {}};
    t.int_value = static_cast<std::int64_t>(acc);
    return t;
  }

  Token lex_word(SourcePos start, std::size_t start_offset) {
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      advance();
    }
    std::string word = text_since(start_offset);
    TokenKind kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident;
    return Token{kind, word, start, 0, "", {}};
  }

  Token lex_string(SourcePos start, std::size_t start_offset) {
    advance();  // opening quote
    std::string decoded;
    for (;;) {
      if (at_end() || peek() == '\n') throw LexError(start, "unterminated string literal");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) throw LexError(start, "unterminated string literal");
        char esc = advance();
        switch (esc) {
          case 'n': decoded.push_back('\n'); break;
          case 't': decoded.push_back('\t'); break;
          case '"': decoded.push_back('"'); break;
          case '\\': decoded.push_back('\\'); break;
          default:
            throw LexError(pos(), std::string("unknown escape sequence \\") + esc);
        }
      } else {
        decoded.push_back(c);
      }
    }
    Token t{TokenKind::StrLit, text_since(start_offset), start, 0, std::move(decoded), {}};
    return t;
  }

  Token lex_label(SourcePos start, std::size_t start_offset) {
    // Consume through the closing '>'. Nothing inside a label literal nests.
    while (!at_end() && peek() != '>') advance();
    if (at_end()) throw LexError(start, "unterminated label literal");
    advance();  // '>'
    std::string raw = text_since(start_offset);
    Token t{TokenKind::LabelLit, raw, start, 0, "", {}};
    try {
      t.label_value = parse_label(raw);
    } catch (const LabelParseError& e) {
      throw LexError(start, e.what());
    }
    return t;
  }

  Token lex_punct(SourcePos start, std::size_t start_offset) {
    char c = advance();
    switch (c) {
      case '(':
        if (peek() == ')') {
          advance();
          return punct(start, start_offset);
        }
        [[fallthrough]];
      case ')':
      case '{':
      case '}':
      case ';':
      case '+':
      case '-':
      case '*':
      case '/':
      case '<':
        return punct(start, start_offset);
      case '=':
        if (peek() == '=' || peek() == '>') advance();
        return punct(start, start_offset);
      case '&':
        if (peek() != '&') throw LexError(start, "expected '&&'");
        advance();
        return punct(start, start_offset);
      case '|':
        if (peek() != '|') throw LexError(start, "expected '||'");
        advance();
        return punct(start, start_offset);
      default:
        throw LexError(start, std::string("illegal character '") + c + "'");
    }
  }

  Token punct(SourcePos start, std::size_t start_offset) {
    return Token{TokenKind::Punct, text_since(start_offset), start, 0, "", {}};
  }

  std::string text_since(std::size_t start_offset) const {
    return std::string(src_.substr(start_offset, offset_ - start_offset));
  }

  std::string_view src_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (std::string_view kw : kKeywords)
    if (kw == word) return true;
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace lio
