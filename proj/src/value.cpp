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

#include "lio/value.hpp"

namespace lio {

std::string_view stop_kind_name(StopKind kind) {
  switch (kind) {
    case StopKind::IFCViolation: return "IFCViolation";
    case StopKind::ClearanceViolation: return "ClearanceViolation";
    case StopKind::ScopeOverflow: return "ScopeOverflow";
    case StopKind::TypeErrorDynamic: return "TypeErrorDynamic";
    case StopKind::LatticeMismatch: return "LatticeMismatch";
  }
  return "?";
}

std::string_view value_kind_name(const Value& v) {
  struct Namer {
    std::string_view operator()(std::int64_t) { return "int"; }
    std::string_view operator()(bool) { return "bool"; }
    std::string_view operator()(const std::string&) { return "string"; }
    std::string_view operator()(Unit) { return "unit"; }
    std::string_view operator()(const Closure&) { return "function"; }
    std::string_view operator()(const Labeled&) { return "labeled"; }
    std::string_view operator()(const RefHandle&) { return "ref"; }
    std::string_view operator()(const ExceptionBox&) { return "exception"; }
  };
  return std::visit(Namer{}, v.data);
}

}  // namespace lio
