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

#include "lio/printer.hpp"

#include <sstream>

namespace lio {

std::string_view binop_symbol(BinOpKind op) {
  switch (op) {
    case BinOpKind::Add: return "+";
    case BinOpKind::Sub: return "-";
    case BinOpKind::Mul: return "*";
    case BinOpKind::Div: return "/";
    case BinOpKind::Eq: return "==";
    case BinOpKind::Lt: return "<";
    case BinOpKind::And: return "&&";
    case BinOpKind::Or: return "||";
  }
  return "?";
}

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

namespace {

// Grammar levels: 0 expr, 1 seq, 2 infix, 3 app, 4 prim. A node prints
// bare when its own level is at least the level its position requires.
constexpr int kExpr = 0, kSeq = 1, kInfix = 2, kApp = 3, kPrim = 4;

struct PrintVisitor {
  std::ostream& out;

  int level_of(const ExprNode& node) const {
    return std::visit(
        [](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Let> || std::is_same_v<T, Lambda> ||
                        std::is_same_v<T, If> || std::is_same_v<T, TryCatch>) {
            return kExpr;
          } else if constexpr (std::is_same_v<T, SeqE>) {
            return kSeq;
          } else if constexpr (std::is_same_v<T, BinOp>) {
            return kInfix;
          } else if constexpr (std::is_same_v<T, Apply>) {
            return kApp;
          } else {
            return kPrim;
          }
        },
        node);
  }

  void print(const Expr& e, int required) {
    bool parens = level_of(e.node) < required;
    if (parens) out << "(";
    std::visit(PrintVisitor{out}, e.node);
    if (parens) out << ")";
  }

  void operator()(const IntLit& n) { out << n.value; }
  void operator()(const BoolLit& n) { out << (n.value ? "true" : "false"); }
  void operator()(const StrLit& n) { out << quote_string(n.value); }
  void operator()(const UnitLit&) { out << "()"; }
  void operator()(const VarRef& n) { out << n.name; }

  void operator()(const Lambda& n) {
    out << "fn " << n.param << " => ";
    print(*n.body, kExpr);
  }

  void operator()(const Apply& n) {
    print(*n.fn, kApp);
    out << " ";
    print(*n.arg, kPrim);
  }

  void operator()(const Let& n) {
    out << "let " << n.name << " = ";
    print(*n.bound, kExpr);
    out << " in ";
    print(*n.body, kExpr);
  }

  void operator()(const If& n) {
    out << "if ";
    print(*n.cond, kExpr);
    out << " then ";
    print(*n.then_branch, kExpr);
    out << " else ";
    print(*n.else_branch, kExpr);
  }

  void operator()(const BinOp& n) {
    print(*n.lhs, kInfix);
    out << " " << binop_symbol(n.op) << " ";
    print(*n.rhs, kApp);
  }

  void operator()(const LabelE& n) {
    out << "label " << n.label.to_string() << " ";
    print(*n.value, kPrim);
  }

  void operator()(const Unlabel& n) {
    out << "unlabel(";
    print(*n.value, kExpr);
    out << ")";
  }

  void operator()(const LabelOf& n) {
    out << "labelOf(";
    print(*n.value, kExpr);
    out << ")";
  }

  void operator()(const ToLabeled& n) {
    out << "toLabeled " << n.label.to_string() << " { ";
    print(*n.body, kExpr);
    out << " }";
  }

  void operator()(const GetLabel&) { out << "getLabel"; }
  void operator()(const GetClearance&) { out << "getClearance"; }

  void operator()(const LowerClearance& n) { out << "lowerClearance " << n.label.to_string(); }

  void operator()(const NewRef& n) {
    out << "newRef " << n.label.to_string() << " ";
    print(*n.init, kPrim);
  }

  void operator()(const ReadRef& n) {
    out << "readRef(";
    print(*n.ref, kExpr);
    out << ")";
  }

  void operator()(const WriteRef& n) {
    out << "writeRef ";
    print(*n.ref, kPrim);
    out << " ";
    print(*n.value, kPrim);
  }

  void operator()(const ThrowE& n) {
    out << "throw ";
    print(*n.value, kPrim);
  }

  void operator()(const TryCatch& n) {
    out << "try ";
    print(*n.body, kExpr);
    out << " catch " << n.var << " => ";
    print(*n.handler, kExpr);
  }

  void operator()(const SeqE& n) {
    print(*n.first, kInfix);
    out << "; ";
    print(*n.second, kExpr);
  }

  void operator()(const SecretHole& n) { out << "secret " << n.name; }
};

}  // namespace

std::string pretty_print(const Expr& e) {
  std::ostringstream out;
  PrintVisitor{out}.print(e, kExpr);
  return out.str();
}

}  // namespace lio
