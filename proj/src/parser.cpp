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

#include "lio/parser.hpp"

#include <optional>

namespace lio {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ExprPtr run() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::Keyword && peek().lexeme == kw;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == TokenKind::Punct && peek().lexeme == p;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'";
    throw ParseError(t.pos, expected, found);
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("'" + std::string(kw) + "'");
    advance();
  }
  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("'" + std::string(p) + "'");
    advance();
  }
  std::string expect_ident() {
    if (peek().kind != TokenKind::Ident) fail("identifier");
    return advance().lexeme;
  }
  Label expect_label_literal() {
    // Two-point labels lex as plain identifiers L and H.
    if (peek().kind == TokenKind::LabelLit) return advance().label_value;
    if (peek().kind == TokenKind::Ident && (peek().lexeme == "L" || peek().lexeme == "H")) {
      return advance().lexeme == "L" ? Label::low() : Label::high();
    }
    fail("label literal");
  }

  void expect_end() {
    if (peek().kind != TokenKind::End) fail("end of input");
  }

  ExprPtr expr() {
    SourcePos pos = peek().pos;
    if (at_keyword("let")) {
      advance();
      std::string name = expect_ident();
      expect_punct("=");
      ExprPtr bound = expr();
      expect_keyword("in");
      ExprPtr body = expr();
      return make_expr(pos, Let{std::move(name), std::move(bound), std::move(body)});
    }
    if (at_keyword("fn")) {
      advance();
      std::string param = expect_ident();
      expect_punct("=>");
      ExprPtr body = expr();
      return make_expr(pos, Lambda{std::move(param), std::move(body)});
    }
    if (at_keyword("if")) {
      advance();
      ExprPtr cond = expr();
      expect_keyword("then");
      ExprPtr then_branch = expr();
      expect_keyword("else");
      ExprPtr else_branch = expr();
      return make_expr(pos, If{std::move(cond), std::move(then_branch), std::move(else_branch)});
    }
    if (at_keyword("try")) {
      advance();
      ExprPtr body = expr();
      expect_keyword("catch");
      std::string var = expect_ident();
      expect_punct("=>");
      ExprPtr handler = expr();
      return make_expr(pos, TryCatch{std::move(body), std::move(var), std::move(handler)});
    }
    return seq();
  }

  ExprPtr seq() {
    SourcePos pos = peek().pos;
    ExprPtr first = infix();
    if (at_punct(";")) {
      advance();
      ExprPtr rest = expr();
      return make_expr(pos, SeqE{std::move(first), std::move(rest)});
    }
    return first;
  }

  std::optional<BinOpKind> peek_binop() const {
    if (peek().kind != TokenKind::Punct) return std::nullopt;
    const std::string& p = peek().lexeme;
    if (p == "+") return BinOpKind::Add;
    if (p == "-") return BinOpKind::Sub;
    if (p == "*") return BinOpKind::Mul;
    if (p == "/") return BinOpKind::Div;
    if (p == "==") return BinOpKind::Eq;
    if (p == "<") return BinOpKind::Lt;
    if (p == "&&") return BinOpKind::And;
    if (p == "||") return BinOpKind::Or;
    return std::nullopt;
  }

  ExprPtr infix() {
    SourcePos pos = peek().pos;
    ExprPtr lhs = app();
    while (auto op = peek_binop()) {
      advance();
      ExprPtr rhs = app();
      lhs = make_expr(pos, BinOp{*op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  bool starts_prim() const {
    switch (peek().kind) {
      case TokenKind::IntLit:
      case TokenKind::StrLit:
      case TokenKind::Ident:
        return true;
      case TokenKind::Punct:
        return peek().lexeme == "(" || peek().lexeme == "()";
      case TokenKind::Keyword: {
        const std::string& kw = peek().lexeme;
        return kw == "true" || kw == "false" || kw == "label" || kw == "unlabel" ||
               kw == "labelOf" || kw == "toLabeled" || kw == "getLabel" ||
               kw == "getClearance" || kw == "lowerClearance" || kw == "newRef" ||
               kw == "readRef" || kw == "writeRef" || kw == "throw" || kw == "secret";
      }
      default:
        return false;
    }
  }

  ExprPtr app() {
    SourcePos pos = peek().pos;
    ExprPtr fn = prim();
    while (starts_prim()) {
      ExprPtr arg = prim();
      fn = make_expr(pos, Apply{std::move(fn), std::move(arg)});
    }
    return fn;
  }

  ExprPtr parenthesized() {
    expect_punct("(");
    ExprPtr inner = expr();
    expect_punct(")");
    return inner;
  }

  ExprPtr prim() {
    SourcePos pos = peek().pos;
    switch (peek().kind) {
      case TokenKind::IntLit: {
        const Token& t = advance();
        return make_expr(pos, IntLit{t.int_value});
      }
      case TokenKind::StrLit: {
        const Token& t = advance();
        return make_expr(pos, StrLit{t.str_value});
      }
      case TokenKind::Ident:
        return make_expr(pos, VarRef{advance().lexeme});
      case TokenKind::Punct:
        if (peek().lexeme == "()") {
          advance();
          return make_expr(pos, UnitLit{});
        }
        if (peek().lexeme == "(") return parenthesized();
        fail("expression");
      case TokenKind::Keyword:
        break;
      default:
        fail("expression");
    }

    const std::string kw = peek().lexeme;
    if (kw == "true" || kw == "false") {
      advance();
      return make_expr(pos, BoolLit{kw == "true"});
    }
    if (kw == "label") {
      advance();
      Label l = expect_label_literal();
      return make_expr(pos, LabelE{std::move(l), prim()});
    }
    if (kw == "unlabel") {
      advance();
      return make_expr(pos, Unlabel{parenthesized()});
    }
    if (kw == "labelOf") {
      advance();
      return make_expr(pos, LabelOf{parenthesized()});
    }
    if (kw == "toLabeled") {
      advance();
      Label l = expect_label_literal();
      expect_punct("{");
      ExprPtr body = expr();
      expect_punct("}");
      return make_expr(pos, ToLabeled{std::move(l), std::move(body)});
    }
    if (kw == "getLabel") {
      advance();
      return make_expr(pos, GetLabel{});
    }
    if (kw == "getClearance") {
      advance();
      return make_expr(pos, GetClearance{});
    }
    if (kw == "lowerClearance") {
      advance();
      return make_expr(pos, LowerClearance{expect_label_literal()});
    }
    if (kw == "newRef") {
      advance();
      Label l = expect_label_literal();
      return make_expr(pos, NewRef{std::move(l), prim()});
    }
    if (kw == "readRef") {
      advance();
      return make_expr(pos, ReadRef{parenthesized()});
    }
    if (kw == "writeRef") {
      advance();
      ExprPtr ref = prim();
      ExprPtr value = prim();
      return make_expr(pos, WriteRef{std::move(ref), std::move(value)});
    }
    if (kw == "throw") {
      advance();
      return make_expr(pos, ThrowE{prim()});
    }
    if (kw == "secret") {
      advance();
      return make_expr(pos, SecretHole{expect_ident()});
    }
    fail("expression");
  }

  const std::vector<Token>& tokens_;
  std::size_t index_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse_program(std::string_view source) { return parse(tokenize(source)); }

}  // namespace lio
