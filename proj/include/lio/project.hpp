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

#ifndef LIO_PROJECT_HPP_
#define LIO_PROJECT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lio/eval.hpp"

namespace lio {

// What a level-bounded observer sees of a run. Hidden outcomes collapse
// into one token regardless of how the run ended, so normal completion,
// stops, and uncaught exceptions above the observation level are all
// indistinguishable.
enum class OutcomeClass { Hidden, Value, Stopped, Uncaught, Timeout };

struct Observation {
  OutcomeClass outcome = OutcomeClass::Hidden;
  std::string rendered;     // value / exception text when visible
  std::string final_label;  // only when the outcome is visible
  std::vector<TraceEvent> events;

  bool operator==(const Observation&) const = default;
  std::string to_string() const;
};

// Renders a value. With an observation bound, Labeled payloads above the
// bound are masked as •; labels themselves stay visible. Without a bound
// everything is rendered (the trusted top level owns the run).
std::string render_value(const Value& v, const std::optional<Label>& observe);

Observation low_project(const RunReport& report, const Label& observe);

// Fixed-schema trace serialization:
// {"version":1,"lattice":...,"events":[...],"final_label":...,"outcome":{...}}
nlohmann::ordered_json trace_json(const RunReport& report, LatticeKind lattice);

std::string_view lattice_kind_name(LatticeKind kind);

}  // namespace lio

#endif  // LIO_PROJECT_HPP_
