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

#ifndef LIO_VALUE_HPP_
#define LIO_VALUE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lio/lattice.hpp"

namespace lio {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Env;
using EnvPtr = std::shared_ptr<const Env>;

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct SourcePos {
  int line = 0;
  int column = 0;
  bool operator==(const SourcePos&) const = default;
};

// Monitor stops: runs terminated by the IFC monitor, as opposed to
// program-level labeled exceptions. Not catchable inside the program.
enum class StopKind {
  IFCViolation,
  ClearanceViolation,
  ScopeOverflow,
  TypeErrorDynamic,
  LatticeMismatch,
};

std::string_view stop_kind_name(StopKind kind);

struct Unit {
  bool operator==(const Unit&) const { return true; }
};

struct Closure {
  std::string param;
  ExprPtr body;
  EnvPtr env;
};

class Context;
struct ValueProjector;

/**
 * An opaque (label, payload) pair: the only vehicle for data above the
 * current label. The payload is reachable solely through Context::unlabel
 * (which taints) and the exception re-raise path.
 */
class Labeled {
 public:
  const Label& label() const { return label_; }

  // Trusted construction for run inputs and policy-layer relabeling.
  // Putting data in reveals nothing; only unlabel gets it back out.
  static Labeled for_input(Label label, ValuePtr payload) {
    return Labeled(std::move(label), std::move(payload));
  }

 private:
  Labeled(Label label, ValuePtr payload) : label_(std::move(label)), payload_(std::move(payload)) {}

  Label label_;
  ValuePtr payload_;

  friend class Context;
  friend struct ValueProjector;
};

// Carried by an exception value: either a program-level labeled exception
// or a monitor stop captured at a toLabeled boundary. Re-raised on unlabel.
struct ExceptionBox {
  Label label;                    // label the exception re-raises at
  std::optional<StopKind> stop;   // set when this encodes a captured stop
  SourcePos pos;
  ValuePtr payload;               // program payload; null for stops
};

struct RefHandle {
  std::uint64_t store_id = 0;
  std::uint64_t id = 0;
  Label label;
};

struct Value {
  std::variant<std::int64_t, bool, std::string, Unit, Closure, Labeled, RefHandle, ExceptionBox>
      data;
};

inline ValuePtr make_int(std::int64_t v) { return std::make_shared<Value>(Value{v}); }
inline ValuePtr make_bool(bool v) { return std::make_shared<Value>(Value{v}); }
inline ValuePtr make_str(std::string v) { return std::make_shared<Value>(Value{std::move(v)}); }
inline ValuePtr make_unit() { return std::make_shared<Value>(Value{Unit{}}); }
inline ValuePtr make_value(Labeled lv) { return std::make_shared<Value>(Value{std::move(lv)}); }
inline ValuePtr make_value(RefHandle h) { return std::make_shared<Value>(Value{std::move(h)}); }
inline ValuePtr make_value(Closure c) { return std::make_shared<Value>(Value{std::move(c)}); }
inline ValuePtr make_value(ExceptionBox b) { return std::make_shared<Value>(Value{std::move(b)}); }

template <typename T>
const T* value_as(const ValuePtr& v) {
  return v ? std::get_if<T>(&v->data) : nullptr;
}

// The dynamic kind of a value, for diagnostics.
std::string_view value_kind_name(const Value& v);

}  // namespace lio

#endif  // LIO_VALUE_HPP_
