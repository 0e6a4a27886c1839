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

#include "lio/runtime.hpp"

#include <stdexcept>
#include <utility>

namespace lio {

std::string_view trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::Taint: return "Taint";
    case TraceKind::Label: return "Label";
    case TraceKind::Unlabel: return "Unlabel";
    case TraceKind::ToLabeledEnter: return "ToLabeledEnter";
    case TraceKind::ToLabeledExit: return "ToLabeledExit";
    case TraceKind::Throw: return "Throw";
    case TraceKind::Catch: return "Catch";
    case TraceKind::RefNew: return "RefNew";
    case TraceKind::RefRead: return "RefRead";
    case TraceKind::RefWrite: return "RefWrite";
  }
  return "?";
}

Context::Context(Label initial, Label clearance, MonitorMutations mutations)
    : current_(std::move(initial)), clearance_(std::move(clearance)), mutations_(mutations) {
  if (!can_flow_to(current_, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, {},
                      "initial label does not flow to clearance"};
  }
}

void Context::record(TraceKind kind, const Label& label, SourcePos pos) {
  trace_.push_back(TraceEvent{kind, label, pos});
}

void Context::assert_invariant() const {
  if (!can_flow_to(current_, clearance_)) {
    throw std::logic_error("context invariant broken: current label above clearance");
  }
}

void Context::taint(const Label& l, SourcePos pos) {
  Label raised = join(current_, l);
  if (!can_flow_to(raised, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "taint to " + raised.to_string() + " exceeds clearance " +
                          clearance_.to_string()};
  }
  current_ = std::move(raised);
  record(TraceKind::Taint, current_, pos);
  assert_invariant();
}

Labeled Context::make_labeled(const Label& l, ValuePtr v, SourcePos pos) {
  if (!mutations_.disable_label_check && !can_flow_to(current_, l)) {
    throw MonitorStop{StopKind::IFCViolation, current_, pos,
                      "cannot label below the current label " + current_.to_string()};
  }
  if (!can_flow_to(l, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "label " + l.to_string() + " exceeds clearance " + clearance_.to_string()};
  }
  record(TraceKind::Label, l, pos);
  return Labeled(l, std::move(v));
}

ValuePtr Context::unlabel(const Labeled& lv, SourcePos pos) {
  Label raised = join(current_, lv.label_);
  if (!mutations_.disable_unlabel_taint) {
    if (!can_flow_to(raised, clearance_)) {
      throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                        "unlabeling " + lv.label_.to_string() + " exceeds clearance " +
                            clearance_.to_string()};
    }
    current_ = raised;
    assert_invariant();
  }
  record(TraceKind::Unlabel, raised, pos);

  // A payload that encodes an exception re-raises at this point.
  if (const ExceptionBox* box = value_as<ExceptionBox>(lv.payload_)) {
    if (box->stop.has_value()) {
      throw MonitorStop{*box->stop, current_, box->pos, "re-raised from labeled value"};
    }
    throw ThrownException{current_, box->payload};
  }
  return lv.payload_;
}

void Context::lower_clearance(const Label& c, SourcePos pos) {
  if (!can_flow_to(current_, c)) {
    throw MonitorStop{StopKind::IFCViolation, current_, pos,
                      "clearance " + c.to_string() + " would fall below the current label"};
  }
  if (!can_flow_to(c, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "raising clearance is forbidden"};
  }
  clearance_ = c;
  assert_invariant();
}

void Context::throw_labeled(ValuePtr payload, SourcePos pos) {
  record(TraceKind::Throw, current_, pos);
  throw ThrownException{current_, std::move(payload)};
}

Labeled Context::to_labeled(const Label& l, SourcePos pos, const std::function<ValuePtr()>& body) {
  if (!can_flow_to(current_, l)) {
    throw MonitorStop{StopKind::IFCViolation, current_, pos,
                      "toLabeled bound " + l.to_string() + " is below the current label"};
  }
  if (!can_flow_to(l, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "toLabeled bound " + l.to_string() + " exceeds clearance " +
                          clearance_.to_string()};
  }

  const Label saved_label = current_;
  const Label saved_clearance = clearance_;
  record(TraceKind::ToLabeledEnter, l, pos);

  // Everything the body did above l must be indistinguishable at l:
  // a result, an exception, or a stop whose level escapes l all collapse
  // into the same ScopeOverflow box.
  Labeled result = [&]() -> Labeled {
    auto overflow_box = [&]() {
      return Labeled(l, make_value(ExceptionBox{l, StopKind::ScopeOverflow, pos, nullptr}));
    };
    try {
      ValuePtr v = body();
      Label body_label = current_;
      current_ = saved_label;
      clearance_ = saved_clearance;
      if (!mutations_.disable_tolabeled_check && !can_flow_to(body_label, l)) {
        return overflow_box();
      }
      return Labeled(l, std::move(v));
    } catch (const ThrownException& e) {
      current_ = saved_label;
      clearance_ = saved_clearance;
      if (!mutations_.disable_tolabeled_check && !can_flow_to(e.label, l)) {
        return overflow_box();
      }
      return Labeled(l, make_value(ExceptionBox{e.label, std::nullopt, pos, e.payload}));
    } catch (const MonitorStop& s) {
      current_ = saved_label;
      clearance_ = saved_clearance;
      if (!mutations_.disable_tolabeled_check && !can_flow_to(s.at, l)) {
        return overflow_box();
      }
      return Labeled(l, make_value(ExceptionBox{l, s.kind, s.pos, nullptr}));
    } catch (const LatticeMismatchError&) {
      Label at = current_;
      current_ = saved_label;
      clearance_ = saved_clearance;
      if (!mutations_.disable_tolabeled_check && !can_flow_to(at, l)) {
        return overflow_box();
      }
      return Labeled(l, make_value(ExceptionBox{l, StopKind::LatticeMismatch, pos, nullptr}));
    }
  }();

  record(TraceKind::ToLabeledExit, l, pos);
  assert_invariant();
  return result;
}

void Context::on_catch(const ThrownException& e, SourcePos pos) {
  Label raised = join(current_, e.label);
  if (!can_flow_to(raised, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "caught exception labeled above the clearance"};
  }
  current_ = std::move(raised);
  record(TraceKind::Catch, current_, pos);
  assert_invariant();
}

ValuePtr Context::catch_labeled(const std::function<ValuePtr()>& body,
                                const std::function<ValuePtr(ValuePtr)>& handler, SourcePos pos) {
  try {
    return body();
  } catch (const ThrownException& e) {
    on_catch(e, pos);
    return handler(e.payload);
  }
}

RefHandle Context::new_ref(const Label& l, ValuePtr v, SourcePos pos) {
  if (!can_flow_to(current_, l)) {
    throw MonitorStop{StopKind::IFCViolation, current_, pos,
                      "cannot create a reference below the current label"};
  }
  if (!can_flow_to(l, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "reference label " + l.to_string() + " exceeds clearance " +
                          clearance_.to_string()};
  }
  std::uint64_t id = store_.alloc(std::move(v));
  record(TraceKind::RefNew, l, pos);
  return RefHandle{store_.store_id(), id, l};
}

ValuePtr Context::read_ref(const RefHandle& r, SourcePos pos) {
  if (!store_.owns(r)) {
    throw MonitorStop{StopKind::TypeErrorDynamic, current_, pos,
                      "reference belongs to a different context"};
  }
  Label raised = join(current_, r.label);
  if (!can_flow_to(raised, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "reading " + r.label.to_string() + " exceeds clearance " +
                          clearance_.to_string()};
  }
  current_ = std::move(raised);
  record(TraceKind::RefRead, current_, pos);
  assert_invariant();
  return store_.get(r.id);
}

void Context::write_ref(const RefHandle& r, ValuePtr v, SourcePos pos) {
  if (!store_.owns(r)) {
    throw MonitorStop{StopKind::TypeErrorDynamic, current_, pos,
                      "reference belongs to a different context"};
  }
  if (!can_flow_to(current_, r.label)) {
    throw MonitorStop{StopKind::IFCViolation, current_, pos,
                      "write below the current label " + current_.to_string()};
  }
  if (!can_flow_to(r.label, clearance_)) {
    throw MonitorStop{StopKind::ClearanceViolation, current_, pos,
                      "writing " + r.label.to_string() + " exceeds clearance " +
                          clearance_.to_string()};
  }
  store_.set(r.id, std::move(v));
  record(TraceKind::RefWrite, r.label, pos);
}

ContextSnapshot Context::snapshot() const {
  return ContextSnapshot{current_, clearance_, store_.snapshot()};
}

}  // namespace lio
