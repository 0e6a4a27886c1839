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

#ifndef LIO_AST_HPP_
#define LIO_AST_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "lio/lattice.hpp"
#include "lio/value.hpp"

namespace lio {

// Expression language driving the monitor. One struct per production;
// every node carries its source position.

struct IntLit { std::int64_t value; };
struct BoolLit { bool value; };
struct StrLit { std::string value; };
struct UnitLit {};
struct VarRef { std::string name; };
struct Lambda { std::string param; ExprPtr body; };
struct Apply { ExprPtr fn; ExprPtr arg; };
struct Let { std::string name; ExprPtr bound; ExprPtr body; };
struct If { ExprPtr cond; ExprPtr then_branch; ExprPtr else_branch; };

enum class BinOpKind { Add, Sub, Mul, Div, Eq, Lt, And, Or };
struct BinOp { BinOpKind op; ExprPtr lhs; ExprPtr rhs; };

struct LabelE { Label label; ExprPtr value; };
struct Unlabel { ExprPtr value; };
struct LabelOf { ExprPtr value; };
struct ToLabeled { Label label; ExprPtr body; };
struct GetLabel {};
struct GetClearance {};
struct LowerClearance { Label label; };
struct NewRef { Label label; ExprPtr init; };
struct ReadRef { ExprPtr ref; };
struct WriteRef { ExprPtr ref; ExprPtr value; };
struct ThrowE { ExprPtr value; };
struct TryCatch { ExprPtr body; std::string var; ExprPtr handler; };
struct SeqE { ExprPtr first; ExprPtr second; };
struct SecretHole { std::string name; };

using ExprNode =
    std::variant<IntLit, BoolLit, StrLit, UnitLit, VarRef, Lambda, Apply, Let, If, BinOp, LabelE,
                 Unlabel, LabelOf, ToLabeled, GetLabel, GetClearance, LowerClearance, NewRef,
                 ReadRef, WriteRef, ThrowE, TryCatch, SeqE, SecretHole>;

struct Expr {
  SourcePos pos;
  ExprNode node;
};

template <typename T>
ExprPtr make_expr(SourcePos pos, T node) {
  return std::make_shared<Expr>(Expr{pos, ExprNode{std::move(node)}});
}

std::string_view binop_symbol(BinOpKind op);

}  // namespace lio

#endif  // LIO_AST_HPP_
