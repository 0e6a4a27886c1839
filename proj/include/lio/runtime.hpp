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

#ifndef LIO_RUNTIME_HPP_
#define LIO_RUNTIME_HPP_

#include <functional>
#include <string>
#include <vector>

#include "lio/lattice.hpp"
#include "lio/refs.hpp"
#include "lio/value.hpp"

namespace lio {

/**
 * The floating-label monitor.
 *
 * A Context holds the single mutable current label plus a clearance that
 * bounds it from above. Observing labeled data raises (taints) the current
 * label by join; the clearance can only be lowered. Everything the program
 * touches in lexical scope is implicitly protected by the current label;
 * Labeled values are the one vehicle for data above it.
 *
 * A Context is confined to one thread at a time; independent contexts may
 * run in parallel freely.
 */

enum class TraceKind {
  Taint,
  Label,
  Unlabel,
  ToLabeledEnter,
  ToLabeledExit,
  Throw,
  Catch,
  RefNew,
  RefRead,
  RefWrite,
};

std::string_view trace_kind_name(TraceKind kind);

// One successful monitor-mediated step. `label` is the level at which the
// event's occurrence is decidable: an observer below it must not learn the
// event happened, so low projections elide it entirely.
struct TraceEvent {
  TraceKind kind;
  Label label;
  SourcePos pos;
  bool operator==(const TraceEvent&) const = default;
};

// Program-level labeled exception. Always labeled with the current label
// at the (re-)throw point.
struct ThrownException {
  Label label;
  ValuePtr payload;
};

// Monitor stop: the run is cut by the monitor itself. Distinct from
// ThrownException and never catchable by program code.
struct MonitorStop {
  StopKind kind;
  Label at;  // current label when the stop fired
  SourcePos pos;
  std::string detail;
};

// Fault injection for the harness sensitivity runs. A healthy monitor has
// all three off.
struct MonitorMutations {
  bool disable_unlabel_taint = false;   // unlabel no longer raises the label
  bool disable_label_check = false;     // label() skips the no-write-down check
  bool disable_tolabeled_check = false; // toLabeled packages results without the bound check

  bool any() const { return disable_unlabel_taint || disable_label_check || disable_tolabeled_check; }
};

struct ContextSnapshot {
  Label current_label;
  Label clearance;
  std::vector<std::pair<std::uint64_t, const Value*>> cells;
  bool operator==(const ContextSnapshot&) const = default;
};

class Context {
 public:
  // Throws MonitorStop{ClearanceViolation} unless initial ⊑ clearance.
  Context(Label initial, Label clearance, MonitorMutations mutations = {});

  const Label& current_label() const { return current_; }
  const Label& clearance() const { return clearance_; }

  // current := current ⊔ l. Fails with ClearanceViolation if that would
  // exceed the clearance; the label is untouched on failure.
  void taint(const Label& l, SourcePos pos = {});

  // Wraps v at label l. Requires current ⊑ l ⊑ clearance.
  Labeled make_labeled(const Label& l, ValuePtr v, SourcePos pos = {});

  // Extracts the payload, tainting with its label. If the payload encodes
  // an exception it is re-raised here instead of returned.
  ValuePtr unlabel(const Labeled& lv, SourcePos pos = {});

  static const Label& label_of(const Labeled& lv) { return lv.label(); }

  // clearance := c. Requires current ⊑ c ⊑ clearance; raising is forbidden.
  void lower_clearance(const Label& c, SourcePos pos = {});

  [[noreturn]] void throw_labeled(ValuePtr payload, SourcePos pos = {});

  // Runs body with the same clearance, then restores both the current
  // label and the clearance. The result (normal value, labeled exception,
  // or monitor stop) is packaged at l; a body whose final label escapes l
  // is folded into a ScopeOverflow box so that nothing above l survives
  // the boundary.
  Labeled to_labeled(const Label& l, SourcePos pos, const std::function<ValuePtr()>& body);

  // Taints with a caught exception's label before the handler runs.
  void on_catch(const ThrownException& e, SourcePos pos = {});

  // Runs body; on a labeled exception taints with its label and runs the
  // handler on the payload. Monitor stops pass through uncaught.
  ValuePtr catch_labeled(const std::function<ValuePtr()>& body,
                         const std::function<ValuePtr(ValuePtr)>& handler, SourcePos pos = {});

  // Labeled references. Creation and writes follow the no-write-down rule
  // (current ⊑ ref label ⊑ clearance); reads taint like unlabel.
  RefHandle new_ref(const Label& l, ValuePtr v, SourcePos pos = {});
  ValuePtr read_ref(const RefHandle& r, SourcePos pos = {});
  void write_ref(const RefHandle& r, ValuePtr v, SourcePos pos = {});

  const std::vector<TraceEvent>& trace() const { return trace_; }
  const RefStore& store() const { return store_; }

  ContextSnapshot snapshot() const;

  const MonitorMutations& mutations() const { return mutations_; }

 private:
  void record(TraceKind kind, const Label& label, SourcePos pos);
  void assert_invariant() const;

  Label current_;
  Label clearance_;
  MonitorMutations mutations_;
  RefStore store_;
  std::vector<TraceEvent> trace_;
};

}  // namespace lio

#endif  // LIO_RUNTIME_HPP_
