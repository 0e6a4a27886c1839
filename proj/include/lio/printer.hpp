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

#ifndef LIO_PRINTER_HPP_
#define LIO_PRINTER_HPP_

#include <string>

#include "lio/ast.hpp"

namespace lio {

// Canonical single-line rendering. parse(pretty_print(e)) is structurally
// equal to e, so pretty_print ∘ parse is a fixpoint on printed programs.
std::string pretty_print(const Expr& e);

std::string quote_string(const std::string& s);

}  // namespace lio

#endif  // LIO_PRINTER_HPP_
