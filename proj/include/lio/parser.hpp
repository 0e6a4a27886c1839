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

#ifndef LIO_PARSER_HPP_
#define LIO_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "lio/ast.hpp"
#include "lio/lexer.hpp"

namespace lio {

struct ParseError : std::runtime_error {
  ParseError(SourcePos pos, std::string expected, std::string found)
      : std::runtime_error("expected " + expected + ", found " + found),
        pos(pos),
        expected(std::move(expected)),
        found(std::move(found)) {}
  SourcePos pos;
  std::string expected;
  std::string found;
};

ExprPtr parse(const std::vector<Token>& tokens);

// tokenize + parse. Throws LexError or ParseError.
ExprPtr parse_program(std::string_view source);

}  // namespace lio

#endif  // LIO_PARSER_HPP_
