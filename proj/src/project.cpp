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

#include "lio/project.hpp"

#include <sstream>

#include "lio/printer.hpp"

namespace lio {

namespace {

bool visible_at(const Label& l, const std::optional<Label>& observe) {
  return !observe.has_value() || can_flow_to(l, *observe);
}

}  // namespace

// Rendering needs the payloads behind Labeled values; it is the observer's
// eye, not program code, so it gets friend access.
struct ValueProjector {
  const std::optional<Label>& observe;

  std::string render(const Value& v) const {
    struct R {
      const ValueProjector& self;
      std::string operator()(std::int64_t n) const { return std::to_string(n); }
      std::string operator()(bool b) const { return b ? "true" : "false"; }
      std::string operator()(const std::string& s) const { return quote_string(s); }
      std::string operator()(Unit) const { return "()"; }
      std::string operator()(const Closure& c) const { return "<fn " + c.param + ">"; }
      std::string operator()(const Labeled& lv) const {
        std::string out = "Labeled<" + lv.label().to_string() + ">(";
        if (visible_at(lv.label(), self.observe) && lv.payload_ != nullptr) {
          out += self.render(*lv.payload_);
        } else {
          out += "•";
        }
        return out + ")";
      }
      std::string operator()(const RefHandle& h) const {
        return "ref<" + h.label.to_string() + ">";
      }
      std::string operator()(const ExceptionBox& box) const {
        if (box.stop.has_value()) {
          return "stop<" + std::string(stop_kind_name(*box.stop)) + ">";
        }
        std::string out = "exc<" + box.label.to_string() + ">(";
        if (visible_at(box.label, self.observe) && box.payload != nullptr) {
          out += self.render(*box.payload);
        } else {
          out += "•";
        }
        return out + ")";
      }
    };
    return std::visit(R{*this}, v.data);
  }
};

std::string render_value(const Value& v, const std::optional<Label>& observe) {
  return ValueProjector{observe}.render(v);
}

Observation low_project(const RunReport& report, const Label& observe) {
  Observation obs;
  for (const TraceEvent& e : report.trace) {
    if (can_flow_to(e.label, observe)) obs.events.push_back(e);
  }

  switch (report.status) {
    case RunStatus::Timeout:
      obs.outcome = OutcomeClass::Timeout;
      return obs;
    case RunStatus::Value:
      if (can_flow_to(report.final_label, observe)) {
        obs.outcome = OutcomeClass::Value;
        obs.rendered = render_value(*report.value, observe);
        obs.final_label = report.final_label.to_string();
      }
      return obs;
    case RunStatus::Uncaught:
      if (can_flow_to(report.final_label, observe)) {
        obs.outcome = OutcomeClass::Uncaught;
        obs.rendered = report.uncaught->payload != nullptr
                           ? render_value(*report.uncaught->payload, observe)
                           : "";
        obs.final_label = report.final_label.to_string();
      }
      return obs;
    case RunStatus::Stop:
      // Generic marker; the stop's kind and position stay unobserved.
      if (can_flow_to(report.stop->at, observe)) {
        obs.outcome = OutcomeClass::Stopped;
      }
      return obs;
  }
  return obs;
}

std::string Observation::to_string() const {
  std::ostringstream out;
  switch (outcome) {
    case OutcomeClass::Hidden: out << "⊤-hidden"; break;
    case OutcomeClass::Value: out << rendered << " @" << final_label; break;
    case OutcomeClass::Uncaught: out << "uncaught " << rendered << " @" << final_label; break;
    case OutcomeClass::Stopped: out << "stopped"; break;
    case OutcomeClass::Timeout: out << "timeout"; break;
  }
  for (const TraceEvent& e : events) {
    out << " | " << trace_kind_name(e.kind) << "@" << e.label.to_string();
  }
  return out.str();
}

std::string_view lattice_kind_name(LatticeKind kind) {
  return kind == LatticeKind::TwoPoint ? "two-point" : "principal";
}

namespace {

nlohmann::ordered_json outcome_json(const RunReport& report) {
  nlohmann::ordered_json out;
  switch (report.status) {
    case RunStatus::Value:
      out["status"] = "value";
      out["value"] = render_value(*report.value, std::nullopt);
      break;
    case RunStatus::Uncaught:
      out["status"] = "uncaught";
      out["label"] = report.uncaught->label.to_string();
      out["value"] = report.uncaught->payload != nullptr
                         ? render_value(*report.uncaught->payload, std::nullopt)
                         : "";
      break;
    case RunStatus::Stop:
      out["status"] = "stop";
      out["kind"] = std::string(stop_kind_name(report.stop->kind));
      out["label"] = report.stop->at.to_string();
      out["pos"] = {report.stop->pos.line, report.stop->pos.column};
      break;
    case RunStatus::Timeout:
      out["status"] = "timeout";
      break;
  }
  return out;
}

}  // namespace

nlohmann::ordered_json trace_json(const RunReport& report, LatticeKind lattice) {
  nlohmann::ordered_json out;
  out["version"] = 1;
  out["lattice"] = std::string(lattice_kind_name(lattice));
  nlohmann::ordered_json events = nlohmann::ordered_json::array();
  for (const TraceEvent& e : report.trace) {
    nlohmann::ordered_json ev;
    ev["kind"] = std::string(trace_kind_name(e.kind));
    ev["label"] = e.label.to_string();
    ev["pos"] = {e.pos.line, e.pos.column};
    events.push_back(std::move(ev));
  }
  out["events"] = std::move(events);
  out["final_label"] = report.final_label.to_string();
  out["outcome"] = outcome_json(report);
  return out;
}

}  // namespace lio
