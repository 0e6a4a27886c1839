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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lio/gen.hpp"
#include "lio/lexer.hpp"
#include "lio/parser.hpp"
#include "lio/printer.hpp"
#include "lio/rng.hpp"

using namespace lio;

namespace {

std::vector<TokenKind> kinds_of(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const Token& t : tokens) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("tokenize a let binding") {
  auto tokens = tokenize("let x = 1 in x");
  REQUIRE(tokens.size() == 7);
  CHECK(kinds_of(tokens) ==
        std::vector<TokenKind>{TokenKind::Keyword, TokenKind::Ident, TokenKind::Punct,
                               TokenKind::IntLit, TokenKind::Keyword, TokenKind::Ident,
                               TokenKind::End});
  CHECK(tokens[0].lexeme == "let");
  CHECK(tokens[3].int_value == 1);
  CHECK(tokens[0].pos == SourcePos{1, 1});
  CHECK(tokens[5].pos == SourcePos{1, 14});
}

TEST_CASE("tokenize unlabel call") {
  auto tokens = tokenize("unlabel(h)");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::Keyword);
  CHECK(tokens[1].lexeme == "(");
  CHECK(tokens[2].kind == TokenKind::Ident);
  CHECK(tokens[3].lexeme == ")");
}

TEST_CASE("a principal label literal is one token") {
  auto tokens = tokenize("<{A}|{}>");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].kind == TokenKind::LabelLit);
  CHECK(tokens[0].label_value == Label::secrecy_of({"A"}));
  CHECK(tokens[0].lexeme == "<{A}|{}>");

  auto star = tokenize("<*|{}>");
  CHECK(star[0].label_value == Label::principal(SecrecySet::all(), {}));
}

TEST_CASE("angle bracket is a comparison unless a label follows") {
  auto tokens = tokenize("a < b");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[1].kind == TokenKind::Punct);
  CHECK(tokens[1].lexeme == "<");
}

TEST_CASE("string literals decode escapes and keep raw lexemes") {
  auto tokens = tokenize("\"a\\n\\\"b\"");
  CHECK(tokens[0].str_value == "a\n\"b");
  CHECK(tokens[0].lexeme == "\"a\\n\\\"b\"");
}

TEST_CASE("lex errors carry positions") {
  CHECK_THROWS_AS(tokenize("let x = \"oops"), LexError);
  CHECK_THROWS_AS(tokenize("a ? b"), LexError);
  try {
    tokenize("ok\n  %");
    FAIL("expected a lex error");
  } catch (const LexError& e) {
    CHECK(e.pos == SourcePos{2, 3});
  }
}

TEST_CASE("lexemes plus whitespace reproduce the input") {
  const std::string sources[] = {
      "let x = 1 in x + 2",
      "toLabeled H { unlabel(secret s) }",
      "if a == b then \"yes\\n\" else ()",
      "writeRef r (label <{A,B}|{C}> 5)",
  };
  for (const std::string& src : sources) {
    auto tokens = tokenize(src);
    std::string rebuilt(src.size(), ' ');
    // Paste each lexeme back at its recorded position (single-line inputs).
    for (const Token& t : tokens) {
      if (t.kind == TokenKind::End) continue;
      REQUIRE(t.pos.line == 1);
      rebuilt.replace(static_cast<std::size_t>(t.pos.column - 1), t.lexeme.size(), t.lexeme);
    }
    CHECK(rebuilt == src);
  }
}

TEST_CASE("application is left-associative") {
  ExprPtr e = parse_program("f a b");
  const auto* outer = std::get_if<Apply>(&e->node);
  REQUIRE(outer != nullptr);
  const auto* inner = std::get_if<Apply>(&outer->fn->node);
  REQUIRE(inner != nullptr);
  CHECK(std::get_if<VarRef>(&inner->fn->node)->name == "f");
  CHECK(std::get_if<VarRef>(&inner->arg->node)->name == "a");
  CHECK(std::get_if<VarRef>(&outer->arg->node)->name == "b");
}

TEST_CASE("toLabeled parses label and braced body") {
  ExprPtr e = parse_program("toLabeled H { unlabel(s) }");
  const auto* tl = std::get_if<ToLabeled>(&e->node);
  REQUIRE(tl != nullptr);
  CHECK(tl->label == Label::high());
  const auto* ul = std::get_if<Unlabel>(&tl->body->node);
  REQUIRE(ul != nullptr);
  CHECK(std::get_if<VarRef>(&ul->value->node)->name == "s");
}

TEST_CASE("parse errors report expectation and position") {
  CHECK_THROWS_AS(parse_program("let x = 1 in"), ParseError);
  try {
    parse_program("let x = 1 in");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.expected == "expression");
    CHECK(e.found == "end of input");
  }
  CHECK_THROWS_AS(parse_program("if a then b"), ParseError);
  CHECK_THROWS_AS(parse_program("1 +"), ParseError);
  CHECK_THROWS_AS(parse_program("label 3 x"), ParseError);
}

TEST_CASE("sequencing is right-associative and lowest precedence") {
  ExprPtr e = parse_program("a; b; c");
  const auto* outer = std::get_if<SeqE>(&e->node);
  REQUIRE(outer != nullptr);
  CHECK(std::get_if<VarRef>(&outer->first->node) != nullptr);
  const auto* rest = std::get_if<SeqE>(&outer->second->node);
  REQUIRE(rest != nullptr);
}

TEST_CASE("infix operators share one level and associate left") {
  ExprPtr e = parse_program("1 + 2 * 3");
  const auto* mul = std::get_if<BinOp>(&e->node);
  REQUIRE(mul != nullptr);
  CHECK(mul->op == BinOpKind::Mul);
  const auto* add = std::get_if<BinOp>(&mul->lhs->node);
  REQUIRE(add != nullptr);
  CHECK(add->op == BinOpKind::Add);
}

TEST_CASE("two-point label literals work in all label positions") {
  CHECK(std::get_if<LabelE>(&parse_program("label L 5")->node)->label == Label::low());
  CHECK(std::get_if<LowerClearance>(&parse_program("lowerClearance H")->node)->label ==
        Label::high());
  CHECK(std::get_if<NewRef>(&parse_program("newRef L 0")->node)->label == Label::low());
  // L and H still work as plain variables outside label positions.
  CHECK(std::get_if<VarRef>(&parse_program("L")->node)->name == "L");
}

TEST_CASE("parse error positions stay inside the source") {
  Rng rng(2024);
  GenConfig cfg;
  cfg.max_depth = 4;
  for (int i = 0; i < 300; ++i) {
    cfg.seed = rng.next();
    std::string src = pretty_print(*generate_program(cfg));
    // Truncate to force errors; the reported position must stay in range.
    std::string broken = src.substr(0, src.size() / 2);
    try {
      parse_program(broken);
    } catch (const ParseError& e) {
      CHECK(e.pos.line >= 1);
      CHECK(static_cast<std::size_t>(e.pos.column) <= broken.size() + 1);
    } catch (const LexError& e) {
      CHECK(e.pos.line >= 1);
    }
  }
}

TEST_CASE("pretty-print then parse is a fixpoint on generated programs") {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    cfg.max_depth = 2 + static_cast<int>(rng.below(5));
    cfg.lattice = rng.chance(1, 3) ? LatticeKind::Principal : LatticeKind::TwoPoint;
    ExprPtr original = generate_program(cfg);
    std::string printed = pretty_print(*original);
    ExprPtr reparsed;
    try {
      reparsed = parse_program(printed);
    } catch (const ParseError& e) {
      CAPTURE(printed);
      CAPTURE(e.what());
      FAIL("generated program failed to reparse");
    }
    CHECK(pretty_print(*reparsed) == printed);
  }
}
