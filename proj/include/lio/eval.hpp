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

#ifndef LIO_EVAL_HPP_
#define LIO_EVAL_HPP_

#include <map>
#include <optional>
#include <string>

#include "lio/ast.hpp"
#include "lio/runtime.hpp"

namespace lio {

struct RunConfig {
  LatticeKind lattice = LatticeKind::TwoPoint;
  std::optional<Label> initial_label;  // default per lattice
  std::optional<Label> clearance;      // default per lattice
  std::map<std::string, Labeled> secrets;
  std::size_t step_budget = 100000;
  int max_eval_depth = 2000;
  MonitorMutations mutations;

  Label effective_initial() const {
    return initial_label ? *initial_label : default_initial_label(lattice);
  }
  Label effective_clearance() const {
    return clearance ? *clearance : default_clearance(lattice);
  }
};

enum class RunStatus { Value, Uncaught, Stop, Timeout };

struct StopRecord {
  StopKind kind;
  Label at;
  SourcePos pos;
  std::string detail;
};

struct RunReport {
  RunStatus status = RunStatus::Value;
  ValuePtr value;                        // when status == Value
  std::optional<ExceptionBox> uncaught;  // when status == Uncaught
  std::optional<StopRecord> stop;        // when status == Stop
  Label final_label;
  Label final_clearance;
  std::vector<TraceEvent> trace;
};

// Big-step evaluation under a fresh monitor context. Diverging programs
// are cut off by the step/depth budget and reported as Timeout.
RunReport run_program(const Expr& program, const RunConfig& config);

// Names of secret holes the program mentions, in first-appearance order.
std::vector<std::string> secret_holes(const Expr& program);

std::string_view run_status_name(RunStatus status);

}  // namespace lio

#endif  // LIO_EVAL_HPP_
