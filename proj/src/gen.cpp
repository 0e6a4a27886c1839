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

#include "lio/gen.hpp"

#include <array>
#include <functional>

#include "lio/rng.hpp"

namespace lio {

namespace {

constexpr SourcePos kGenPos{1, 1};

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  ExprPtr run() { return gen(cfg_.max_depth, {}); }

 private:
  enum class Construct {
    IntL, BoolL, StrL, UnitL, Var, Secret, GetLbl, GetClr,
    Let_, Lambda_, Apply_, If_, BinOp_, Seq_, LabelE_, Unlabel_, LabelOf_,
    ToLabeled_, LowerClr, NewRef_, ReadRef_, WriteRef_, Throw_, TryCatch_,
  };

  struct Choice {
    Construct construct;
    int weight;
  };

  std::vector<Choice> choices(bool leaves_only, bool have_vars) const {
    const GenWeights& w = cfg_.weights;
    std::vector<Choice> out = {
        {Construct::IntL, w.int_lit},
        {Construct::BoolL, w.bool_lit},
        {Construct::StrL, w.str_lit},
        {Construct::UnitL, w.unit_lit},
        {Construct::Var, have_vars ? w.var_ref : 0},
        {Construct::Secret, cfg_.secrets.empty() ? 0 : w.secret},
        {Construct::GetLbl, w.get_label},
        {Construct::GetClr, w.get_clearance},
    };
    if (!leaves_only) {
      out.insert(out.end(), {
                                {Construct::Let_, w.let_},
                                {Construct::Lambda_, w.lambda},
                                {Construct::Apply_, w.apply},
                                {Construct::If_, w.if_},
                                {Construct::BinOp_, w.binop},
                                {Construct::Seq_, w.seq},
                                {Construct::LabelE_, w.label_e},
                                {Construct::Unlabel_, w.unlabel},
                                {Construct::LabelOf_, w.label_of},
                                {Construct::ToLabeled_, w.to_labeled},
                                {Construct::LowerClr, w.lower_clearance},
                                {Construct::NewRef_, w.new_ref},
                                {Construct::ReadRef_, w.read_ref},
                                {Construct::WriteRef_, w.write_ref},
                                {Construct::Throw_, w.throw_},
                                {Construct::TryCatch_, w.try_catch},
                            });
    }
    return out;
  }

  Construct pick(const std::vector<Choice>& options) {
    std::uint64_t total = 0;
    for (const Choice& c : options) total += static_cast<std::uint64_t>(c.weight);
    if (total == 0) return Construct::IntL;
    std::uint64_t roll = rng_.below(total);
    for (const Choice& c : options) {
      std::uint64_t w = static_cast<std::uint64_t>(c.weight);
      if (roll < w) return c.construct;
      roll -= w;
    }
    return Construct::IntL;
  }

  Label random_label() {
    if (cfg_.lattice == LatticeKind::TwoPoint) {
      return rng_.chance(1, 2) ? Label::low() : Label::high();
    }
    static const std::array<const char*, 3> universe = {"A", "B", "C"};
    std::set<std::string> secrecy;
    for (const char* p : universe)
      if (rng_.chance(1, 3)) secrecy.insert(p);
    std::set<std::string> integrity;
    if (rng_.chance(1, 10)) integrity.insert(universe[rng_.below(universe.size())]);
    return Label::principal(SecrecySet::of(std::move(secrecy)), std::move(integrity));
  }

  std::string fresh_name() { return "x" + std::to_string(name_counter_++); }

  ExprPtr leaf_int() { return make_expr(kGenPos, IntLit{static_cast<std::int64_t>(rng_.below(100))}); }

  ExprPtr secret_leaf() {
    const auto& [name, label] = cfg_.secrets[rng_.below(cfg_.secrets.size())];
    static_cast<void>(label);
    return make_expr(kGenPos, SecretHole{name});
  }

  // Unlabel aims at labeled data most of the time so taints actually occur;
  // the rest stays type-blind.
  ExprPtr unlabel_target(int depth, const std::vector<std::string>& scope) {
    if (!cfg_.secrets.empty() && rng_.chance(2, 5)) return secret_leaf();
    if (rng_.chance(1, 2)) {
      return make_expr(kGenPos, LabelE{random_label(), gen(depth - 1, scope)});
    }
    return gen(depth - 1, scope);
  }

  ExprPtr gen(int depth, std::vector<std::string> scope) {
    bool leaves_only = depth <= 0;
    Construct c = pick(choices(leaves_only, !scope.empty()));
    switch (c) {
      case Construct::IntL: return leaf_int();
      case Construct::BoolL: return make_expr(kGenPos, BoolLit{rng_.chance(1, 2)});
      case Construct::StrL: {
        static const std::array<const char*, 6> words = {"", "a", "b", "ab", "zz", "q"};
        return make_expr(kGenPos, StrLit{words[rng_.below(words.size())]});
      }
      case Construct::UnitL: return make_expr(kGenPos, UnitLit{});
      case Construct::Var:
        return make_expr(kGenPos, VarRef{scope[rng_.below(scope.size())]});
      case Construct::Secret: return secret_leaf();
      case Construct::GetLbl: return make_expr(kGenPos, GetLabel{});
      case Construct::GetClr: return make_expr(kGenPos, GetClearance{});

      case Construct::Let_: {
        std::string name = fresh_name();
        ExprPtr bound = gen(depth - 1, scope);
        scope.push_back(name);
        ExprPtr body = gen(depth - 1, scope);
        return make_expr(kGenPos, Let{std::move(name), std::move(bound), std::move(body)});
      }
      case Construct::Lambda_: {
        std::string param = fresh_name();
        scope.push_back(param);
        ExprPtr body = gen(depth - 1, scope);
        return make_expr(kGenPos, Lambda{std::move(param), std::move(body)});
      }
      case Construct::Apply_: {
        ExprPtr fn = gen(depth - 1, scope);
        ExprPtr arg = gen(depth - 1, scope);
        return make_expr(kGenPos, Apply{std::move(fn), std::move(arg)});
      }
      case Construct::If_: {
        ExprPtr cond;
        switch (rng_.below(4)) {
          case 0: cond = make_expr(kGenPos, BoolLit{rng_.chance(1, 2)}); break;
          case 1:
            cond = make_expr(kGenPos, BinOp{BinOpKind::Eq, gen(depth - 1, scope),
                                            gen(depth - 1, scope)});
            break;
          case 2:
            if (cfg_.weights.unlabel > 0) {
              cond = make_expr(kGenPos, Unlabel{unlabel_target(depth, scope)});
            } else {
              cond = gen(depth - 1, scope);
            }
            break;
          default: cond = gen(depth - 1, scope); break;
        }
        ExprPtr then_branch = gen(depth - 1, scope);
        ExprPtr else_branch = gen(depth - 1, scope);
        return make_expr(kGenPos,
                         If{std::move(cond), std::move(then_branch), std::move(else_branch)});
      }
      case Construct::BinOp_: {
        static const std::array<BinOpKind, 8> ops = {BinOpKind::Add, BinOpKind::Sub,
                                                     BinOpKind::Mul, BinOpKind::Div,
                                                     BinOpKind::Eq,  BinOpKind::Lt,
                                                     BinOpKind::And, BinOpKind::Or};
        BinOpKind op = ops[rng_.below(ops.size())];
        ExprPtr lhs = gen(depth - 1, scope);
        ExprPtr rhs = gen(depth - 1, scope);
        return make_expr(kGenPos, BinOp{op, std::move(lhs), std::move(rhs)});
      }
      case Construct::Seq_: {
        ExprPtr first = gen(depth - 1, scope);
        ExprPtr second = gen(depth - 1, scope);
        return make_expr(kGenPos, SeqE{std::move(first), std::move(second)});
      }
      case Construct::LabelE_:
        return make_expr(kGenPos, LabelE{random_label(), gen(depth - 1, scope)});
      case Construct::Unlabel_:
        return make_expr(kGenPos, Unlabel{unlabel_target(depth, scope)});
      case Construct::LabelOf_:
        return make_expr(kGenPos, LabelOf{unlabel_target(depth, scope)});
      case Construct::ToLabeled_:
        return make_expr(kGenPos, ToLabeled{random_label(), gen(depth - 1, scope)});
      case Construct::LowerClr:
        return make_expr(kGenPos, LowerClearance{random_label()});
      case Construct::NewRef_:
        return make_expr(kGenPos, NewRef{random_label(), gen(depth - 1, scope)});
      case Construct::ReadRef_:
        return make_expr(kGenPos, ReadRef{gen(depth - 1, scope)});
      case Construct::WriteRef_: {
        ExprPtr ref = gen(depth - 1, scope);
        ExprPtr value = gen(depth - 1, scope);
        return make_expr(kGenPos, WriteRef{std::move(ref), std::move(value)});
      }
      case Construct::Throw_:
        return make_expr(kGenPos, ThrowE{gen(depth - 1, scope)});
      case Construct::TryCatch_: {
        ExprPtr body = gen(depth - 1, scope);
        std::string var = fresh_name();
        scope.push_back(var);
        ExprPtr handler = gen(depth - 1, scope);
        return make_expr(kGenPos, TryCatch{std::move(body), std::move(var), std::move(handler)});
      }
    }
    return leaf_int();
  }

  const GenConfig& cfg_;
  Rng rng_;
  int name_counter_ = 0;
};

}  // namespace

ExprPtr generate_program(const GenConfig& config) { return Generator(config).run(); }

bool mentions_ifc(const Expr& e) {
  bool found = false;
  std::function<void(const Expr&)> walk = [&](const Expr& node) {
    if (found) return;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LabelE> || std::is_same_v<T, Unlabel> ||
                        std::is_same_v<T, LabelOf> || std::is_same_v<T, ToLabeled> ||
                        std::is_same_v<T, GetLabel> || std::is_same_v<T, GetClearance> ||
                        std::is_same_v<T, LowerClearance> || std::is_same_v<T, NewRef> ||
                        std::is_same_v<T, ReadRef> || std::is_same_v<T, WriteRef> ||
                        std::is_same_v<T, ThrowE> || std::is_same_v<T, TryCatch> ||
                        std::is_same_v<T, SecretHole>) {
            found = true;
          }
          if constexpr (std::is_same_v<T, Lambda>) walk(*n.body);
          if constexpr (std::is_same_v<T, Apply>) { walk(*n.fn); walk(*n.arg); }
          if constexpr (std::is_same_v<T, Let>) { walk(*n.bound); walk(*n.body); }
          if constexpr (std::is_same_v<T, If>) {
            walk(*n.cond); walk(*n.then_branch); walk(*n.else_branch);
          }
          if constexpr (std::is_same_v<T, BinOp>) { walk(*n.lhs); walk(*n.rhs); }
          if constexpr (std::is_same_v<T, LabelE>) walk(*n.value);
          if constexpr (std::is_same_v<T, Unlabel>) walk(*n.value);
          if constexpr (std::is_same_v<T, LabelOf>) walk(*n.value);
          if constexpr (std::is_same_v<T, ToLabeled>) walk(*n.body);
          if constexpr (std::is_same_v<T, NewRef>) walk(*n.init);
          if constexpr (std::is_same_v<T, ReadRef>) walk(*n.ref);
          if constexpr (std::is_same_v<T, WriteRef>) { walk(*n.ref); walk(*n.value); }
          if constexpr (std::is_same_v<T, ThrowE>) walk(*n.value);
          if constexpr (std::is_same_v<T, TryCatch>) { walk(*n.body); walk(*n.handler); }
          if constexpr (std::is_same_v<T, SeqE>) { walk(*n.first); walk(*n.second); }
        },
        node.node);
  };
  walk(e);
  return found;
}

namespace {

// Straight-line generator. Tracks the running join of every label the
// program will unlabel, in evaluation order, so minted labels can always
// sit above the current label and no operation can fail at run time.
class StraightLineGenerator {
 public:
  StraightLineGenerator(std::uint64_t seed, LatticeKind lattice, std::string secret_name,
                        Label secret_label)
      : rng_(seed),
        lattice_(lattice),
        secret_name_(std::move(secret_name)),
        secret_label_(std::move(secret_label)),
        running_(default_initial_label(lattice)) {}

  ExprPtr run(int depth) { return gen_int(depth, {}); }

 private:
  Label mintable_label() {
    if (lattice_ == LatticeKind::TwoPoint) {
      if (running_ == Label::high()) return Label::high();
      return rng_.chance(1, 2) ? Label::low() : Label::high();
    }
    std::set<std::string> secrecy = running_.principal_label().secrecy.names();
    static const std::array<const char*, 3> universe = {"A", "B", "C"};
    for (const char* p : universe)
      if (rng_.chance(1, 3)) secrecy.insert(p);
    return Label::principal(SecrecySet::of(std::move(secrecy)), {});
  }

  ExprPtr gen_int(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return leaf(scope);
    switch (rng_.below(6)) {
      case 0: return leaf(scope);
      case 1: {
        static const std::array<BinOpKind, 3> ops = {BinOpKind::Add, BinOpKind::Sub,
                                                     BinOpKind::Mul};
        BinOpKind op = ops[rng_.below(ops.size())];
        ExprPtr lhs = gen_int(depth - 1, scope);
        ExprPtr rhs = gen_int(depth - 1, scope);
        return make_expr(kGenPos, BinOp{op, std::move(lhs), std::move(rhs)});
      }
      case 2: {
        std::string name = "v" + std::to_string(name_counter_++);
        ExprPtr bound = gen_int(depth - 1, scope);
        scope.push_back(name);
        ExprPtr body = gen_int(depth - 1, scope);
        return make_expr(kGenPos, Let{std::move(name), std::move(bound), std::move(body)});
      }
      case 3: {
        ExprPtr first = gen_int(depth - 1, scope);
        ExprPtr second = gen_int(depth - 1, scope);
        return make_expr(kGenPos, SeqE{std::move(first), std::move(second)});
      }
      default: return gen_unlabel(depth, scope);
    }
  }

  ExprPtr gen_unlabel(int depth, const std::vector<std::string>& scope) {
    if (rng_.chance(1, 3)) {
      running_ = join(running_, secret_label_);
      return make_expr(kGenPos, Unlabel{make_expr(kGenPos, SecretHole{secret_name_})});
    }
    // unlabel(label ℓ e): e evaluates first, so generate it first to keep
    // the running join in evaluation order.
    ExprPtr inner = gen_int(depth - 1, scope);
    Label l = mintable_label();
    running_ = join(running_, l);
    return make_expr(kGenPos,
                     Unlabel{make_expr(kGenPos, LabelE{std::move(l), std::move(inner)})});
  }

  ExprPtr leaf(const std::vector<std::string>& scope) {
    if (!scope.empty() && rng_.chance(1, 3)) {
      return make_expr(kGenPos, VarRef{scope[rng_.below(scope.size())]});
    }
    return make_expr(kGenPos, IntLit{static_cast<std::int64_t>(rng_.below(1000))});
  }

  Rng rng_;
  LatticeKind lattice_;
  std::string secret_name_;
  Label secret_label_;
  Label running_;
  int name_counter_ = 0;
};

}  // namespace

ExprPtr generate_straight_line(std::uint64_t seed, LatticeKind lattice,
                               const std::string& secret_name, const Label& secret_label,
                               int depth) {
  return StraightLineGenerator(seed, lattice, secret_name, secret_label).run(depth);
}

}  // namespace lio
