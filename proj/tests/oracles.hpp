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

#ifndef LIO_TESTS_ORACLES_HPP_
#define LIO_TESTS_ORACLES_HPP_

#include <functional>
#include <map>

#include "lio/ast.hpp"

namespace lio::testing {

// Independent label account for straight-line programs: the final current
// label must equal the join of the initial label with the label of every
// value the program unlabels. Straight-line programs execute every
// syntactic unlabel exactly once and unlabel targets carry their labels in
// the text, so one fold over the AST predicts the run outcome without ever
// touching the monitor.
inline Label straight_line_label_oracle(const Expr& program, const Label& initial,
                                        const std::map<std::string, Label>& secret_labels) {
  Label acc = initial;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Unlabel>) {
            const Expr& target = *n.value;
            if (const auto* labeled = std::get_if<LabelE>(&target.node)) {
              acc = join(acc, labeled->label);
              walk(*labeled->value);
            } else if (const auto* hole = std::get_if<SecretHole>(&target.node)) {
              acc = join(acc, secret_labels.at(hole->name));
            } else {
              walk(target);
            }
          } else if constexpr (std::is_same_v<T, Let>) {
            walk(*n.bound);
            walk(*n.body);
          } else if constexpr (std::is_same_v<T, SeqE>) {
            walk(*n.first);
            walk(*n.second);
          } else if constexpr (std::is_same_v<T, BinOp>) {
            walk(*n.lhs);
            walk(*n.rhs);
          } else if constexpr (std::is_same_v<T, LabelE>) {
            walk(*n.value);
          }
        },
        e.node);
  };
  walk(program);
  return acc;
}

}  // namespace lio::testing

#endif  // LIO_TESTS_ORACLES_HPP_
