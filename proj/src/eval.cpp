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

#include "lio/eval.hpp"

#include <functional>
#include <set>

namespace lio {

// Immutable environment: each binding is a cons cell, closures snapshot the
// list they were built over.
struct Env {
  std::string name;
  ValuePtr value;
  EnvPtr next;
};

namespace {

struct TimeoutError {};

EnvPtr extend(EnvPtr env, std::string name, ValuePtr value) {
  return std::make_shared<const Env>(Env{std::move(name), std::move(value), std::move(env)});
}

const ValuePtr* lookup(const EnvPtr& env, const std::string& name) {
  for (const Env* e = env.get(); e != nullptr; e = e->next.get()) {
    if (e->name == name) return &e->value;
  }
  return nullptr;
}

std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
std::int64_t wrap_mul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

class Evaluator {
 public:
  Evaluator(Context& ctx, const RunConfig& cfg) : ctx_(ctx), cfg_(cfg) {}

  ValuePtr eval(const Expr& e, const EnvPtr& env) {
    if (++steps_ > cfg_.step_budget) throw TimeoutError{};
    if (depth_ >= cfg_.max_eval_depth) throw TimeoutError{};
    DepthGuard guard(depth_);
    return std::visit([&](const auto& node) { return eval_node(node, e.pos, env); }, e.node);
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(int& depth) : depth(depth) { ++depth; }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  [[noreturn]] void type_error(SourcePos pos, const std::string& message) {
    throw MonitorStop{StopKind::TypeErrorDynamic, ctx_.current_label(), pos, message};
  }

  ValuePtr eval_node(const IntLit& n, SourcePos, const EnvPtr&) { return make_int(n.value); }
  ValuePtr eval_node(const BoolLit& n, SourcePos, const EnvPtr&) { return make_bool(n.value); }
  ValuePtr eval_node(const StrLit& n, SourcePos, const EnvPtr&) { return make_str(n.value); }
  ValuePtr eval_node(const UnitLit&, SourcePos, const EnvPtr&) { return make_unit(); }

  ValuePtr eval_node(const VarRef& n, SourcePos pos, const EnvPtr& env) {
    if (const ValuePtr* v = lookup(env, n.name)) return *v;
    type_error(pos, "unbound variable '" + n.name + "'");
  }

  ValuePtr eval_node(const Lambda& n, SourcePos, const EnvPtr& env) {
    return make_value(Closure{n.param, n.body, env});
  }

  ValuePtr eval_node(const Apply& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr fn = eval(*n.fn, env);
    ValuePtr arg = eval(*n.arg, env);
    const Closure* closure = value_as<Closure>(fn);
    if (closure == nullptr) {
      type_error(pos, std::string("cannot apply a ") + std::string(value_kind_name(*fn)));
    }
    return eval(*closure->body, extend(closure->env, closure->param, std::move(arg)));
  }

  ValuePtr eval_node(const Let& n, SourcePos, const EnvPtr& env) {
    ValuePtr bound = eval(*n.bound, env);
    return eval(*n.body, extend(env, n.name, std::move(bound)));
  }

  ValuePtr eval_node(const If& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr cond = eval(*n.cond, env);
    const bool* b = value_as<bool>(cond);
    if (b == nullptr) {
      type_error(pos, std::string("if condition is a ") + std::string(value_kind_name(*cond)));
    }
    return eval(*b ? *n.then_branch : *n.else_branch, env);
  }

  ValuePtr eval_node(const BinOp& n, SourcePos pos, const EnvPtr& env) {
    if (n.op == BinOpKind::And || n.op == BinOpKind::Or) {
      ValuePtr lhs = eval(*n.lhs, env);
      const bool* lb = value_as<bool>(lhs);
      if (lb == nullptr) type_error(pos, "boolean operator on a non-bool");
      if (n.op == BinOpKind::And && !*lb) return make_bool(false);
      if (n.op == BinOpKind::Or && *lb) return make_bool(true);
      ValuePtr rhs = eval(*n.rhs, env);
      const bool* rb = value_as<bool>(rhs);
      if (rb == nullptr) type_error(pos, "boolean operator on a non-bool");
      return make_bool(*rb);
    }

    ValuePtr lhs = eval(*n.lhs, env);
    ValuePtr rhs = eval(*n.rhs, env);

    if (n.op == BinOpKind::Eq) return eval_eq(lhs, rhs, pos);

    const std::int64_t* li = value_as<std::int64_t>(lhs);
    const std::int64_t* ri = value_as<std::int64_t>(rhs);
    if (li == nullptr || ri == nullptr) {
      type_error(pos, std::string("arithmetic on ") + std::string(value_kind_name(*lhs)) + " and " +
                          std::string(value_kind_name(*rhs)));
    }
    switch (n.op) {
      case BinOpKind::Add: return make_int(wrap_add(*li, *ri));
      case BinOpKind::Sub: return make_int(wrap_sub(*li, *ri));
      case BinOpKind::Mul: return make_int(wrap_mul(*li, *ri));
      case BinOpKind::Div:
        if (*ri == 0) ctx_.throw_labeled(make_str("divide by zero"), pos);
        if (*li == INT64_MIN && *ri == -1) return make_int(INT64_MIN);  // wraps
        return make_int(*li / *ri);
      case BinOpKind::Lt: return make_bool(*li < *ri);
      default: type_error(pos, "unreachable operator");
    }
  }

  ValuePtr eval_eq(const ValuePtr& lhs, const ValuePtr& rhs, SourcePos pos) {
    if (const auto* a = value_as<std::int64_t>(lhs)) {
      if (const auto* b = value_as<std::int64_t>(rhs)) return make_bool(*a == *b);
    } else if (const auto* la = value_as<bool>(lhs)) {
      if (const auto* lb = value_as<bool>(rhs)) return make_bool(*la == *lb);
    } else if (const auto* sa = value_as<std::string>(lhs)) {
      if (const auto* sb = value_as<std::string>(rhs)) return make_bool(*sa == *sb);
    } else if (value_as<Unit>(lhs) != nullptr) {
      if (value_as<Unit>(rhs) != nullptr) return make_bool(true);
    }
    type_error(pos, std::string("cannot compare ") + std::string(value_kind_name(*lhs)) + " and " +
                        std::string(value_kind_name(*rhs)));
  }

  ValuePtr eval_node(const LabelE& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.value, env);
    return make_value(ctx_.make_labeled(n.label, std::move(v), pos));
  }

  ValuePtr eval_node(const Unlabel& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.value, env);
    const Labeled* lv = value_as<Labeled>(v);
    if (lv == nullptr) {
      type_error(pos, std::string("unlabel of a ") + std::string(value_kind_name(*v)));
    }
    return ctx_.unlabel(*lv, pos);
  }

  ValuePtr eval_node(const LabelOf& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.value, env);
    const Labeled* lv = value_as<Labeled>(v);
    if (lv == nullptr) {
      type_error(pos, std::string("labelOf of a ") + std::string(value_kind_name(*v)));
    }
    return make_str(Context::label_of(*lv).to_string());
  }

  ValuePtr eval_node(const ToLabeled& n, SourcePos pos, const EnvPtr& env) {
    Labeled out = ctx_.to_labeled(n.label, pos, [&] { return eval(*n.body, env); });
    return make_value(std::move(out));
  }

  ValuePtr eval_node(const GetLabel&, SourcePos, const EnvPtr&) {
    return make_str(ctx_.current_label().to_string());
  }

  ValuePtr eval_node(const GetClearance&, SourcePos, const EnvPtr&) {
    return make_str(ctx_.clearance().to_string());
  }

  ValuePtr eval_node(const LowerClearance& n, SourcePos pos, const EnvPtr&) {
    ctx_.lower_clearance(n.label, pos);
    return make_unit();
  }

  ValuePtr eval_node(const NewRef& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.init, env);
    return make_value(ctx_.new_ref(n.label, std::move(v), pos));
  }

  ValuePtr eval_node(const ReadRef& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.ref, env);
    const RefHandle* h = value_as<RefHandle>(v);
    if (h == nullptr) {
      type_error(pos, std::string("readRef of a ") + std::string(value_kind_name(*v)));
    }
    return ctx_.read_ref(*h, pos);
  }

  ValuePtr eval_node(const WriteRef& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr ref = eval(*n.ref, env);
    ValuePtr v = eval(*n.value, env);
    const RefHandle* h = value_as<RefHandle>(ref);
    if (h == nullptr) {
      type_error(pos, std::string("writeRef of a ") + std::string(value_kind_name(*ref)));
    }
    ctx_.write_ref(*h, std::move(v), pos);
    return make_unit();
  }

  ValuePtr eval_node(const ThrowE& n, SourcePos pos, const EnvPtr& env) {
    ValuePtr v = eval(*n.value, env);
    ctx_.throw_labeled(std::move(v), pos);
  }

  ValuePtr eval_node(const TryCatch& n, SourcePos pos, const EnvPtr& env) {
    try {
      return eval(*n.body, env);
    } catch (const ThrownException& e) {
      ctx_.on_catch(e, pos);
      return eval(*n.handler, extend(env, n.var, e.payload));
    }
  }

  ValuePtr eval_node(const SeqE& n, SourcePos, const EnvPtr& env) {
    static_cast<void>(eval(*n.first, env));
    return eval(*n.second, env);
  }

  ValuePtr eval_node(const SecretHole& n, SourcePos pos, const EnvPtr&) {
    auto it = cfg_.secrets.find(n.name);
    if (it == cfg_.secrets.end()) {
      type_error(pos, "no binding for secret '" + n.name + "'");
    }
    return make_value(it->second);
  }

  Context& ctx_;
  const RunConfig& cfg_;
  std::size_t steps_ = 0;
  int depth_ = 0;
};

}  // namespace

std::vector<std::string> secret_holes(const Expr& program) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, SecretHole>) {
            if (seen.insert(node.name).second) names.push_back(node.name);
          } else if constexpr (std::is_same_v<T, Lambda>) {
            walk(*node.body);
          } else if constexpr (std::is_same_v<T, Apply>) {
            walk(*node.fn);
            walk(*node.arg);
          } else if constexpr (std::is_same_v<T, Let>) {
            walk(*node.bound);
            walk(*node.body);
          } else if constexpr (std::is_same_v<T, If>) {
            walk(*node.cond);
            walk(*node.then_branch);
            walk(*node.else_branch);
          } else if constexpr (std::is_same_v<T, BinOp>) {
            walk(*node.lhs);
            walk(*node.rhs);
          } else if constexpr (std::is_same_v<T, LabelE>) {
            walk(*node.value);
          } else if constexpr (std::is_same_v<T, Unlabel>) {
            walk(*node.value);
          } else if constexpr (std::is_same_v<T, LabelOf>) {
            walk(*node.value);
          } else if constexpr (std::is_same_v<T, ToLabeled>) {
            walk(*node.body);
          } else if constexpr (std::is_same_v<T, NewRef>) {
            walk(*node.init);
          } else if constexpr (std::is_same_v<T, ReadRef>) {
            walk(*node.ref);
          } else if constexpr (std::is_same_v<T, WriteRef>) {
            walk(*node.ref);
            walk(*node.value);
          } else if constexpr (std::is_same_v<T, ThrowE>) {
            walk(*node.value);
          } else if constexpr (std::is_same_v<T, TryCatch>) {
            walk(*node.body);
            walk(*node.handler);
          } else if constexpr (std::is_same_v<T, SeqE>) {
            walk(*node.first);
            walk(*node.second);
          }
        },
        e.node);
  };
  walk(program);
  return names;
}

std::string_view run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Value: return "value";
    case RunStatus::Uncaught: return "uncaught";
    case RunStatus::Stop: return "stop";
    case RunStatus::Timeout: return "timeout";
  }
  return "?";
}

RunReport run_program(const Expr& program, const RunConfig& config) {
  Label initial = config.effective_initial();
  Label clearance = config.effective_clearance();

  RunReport report;
  report.final_label = initial;
  report.final_clearance = clearance;

  std::optional<Context> ctx;
  try {
    ctx.emplace(initial, clearance, config.mutations);
  } catch (const MonitorStop& s) {
    report.status = RunStatus::Stop;
    report.stop = StopRecord{s.kind, s.at, s.pos, s.detail};
    return report;
  } catch (const LatticeMismatchError& e) {
    report.status = RunStatus::Stop;
    report.stop = StopRecord{StopKind::LatticeMismatch, initial, {}, e.what()};
    return report;
  }

  Evaluator evaluator(*ctx, config);
  try {
    report.value = evaluator.eval(program, nullptr);
    report.status = RunStatus::Value;
  } catch (const ThrownException& e) {
    report.status = RunStatus::Uncaught;
    report.uncaught = ExceptionBox{e.label, std::nullopt, {}, e.payload};
  } catch (const MonitorStop& s) {
    report.status = RunStatus::Stop;
    report.stop = StopRecord{s.kind, s.at, s.pos, s.detail};
  } catch (const LatticeMismatchError& e) {
    report.status = RunStatus::Stop;
    report.stop = StopRecord{StopKind::LatticeMismatch, ctx->current_label(), {}, e.what()};
  } catch (const TimeoutError&) {
    report.status = RunStatus::Timeout;
  }

  report.final_label = ctx->current_label();
  report.final_clearance = ctx->clearance();
  report.trace = ctx->trace();
  return report;
}

}  // namespace lio
