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

#ifndef LIO_LEXER_HPP_
#define LIO_LEXER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lio/lattice.hpp"
#include "lio/value.hpp"

namespace lio {

enum class TokenKind { Ident, IntLit, StrLit, Keyword, Punct, LabelLit, End };

struct Token {
  TokenKind kind;
  std::string lexeme;   // raw source text, quotes and all
  SourcePos pos;        // 1-based line and column

  // Decoded payloads, populated per kind.
  std::int64_t int_value = 0;
  std::string str_value;  // unescaped string literal
  Label label_value;      // parsed label literal
};

struct LexError : std::runtime_error {
  LexError(SourcePos pos, const std::string& message)
      : std::runtime_error(message), pos(pos) {}
  SourcePos pos;
};

// Full token stream, ending with an End token. `<` immediately followed by
// `{` or `*` begins a label literal; anywhere else it is the comparison
// operator.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace lio

#endif  // LIO_LEXER_HPP_
