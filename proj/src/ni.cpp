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

#include "lio/ni.hpp"

#include "lio/printer.hpp"
#include "lio/rng.hpp"

namespace lio {

namespace {

bool informative(const Observation& o) {
  return o.outcome != OutcomeClass::Hidden || !o.events.empty();
}

std::pair<ValuePtr, ValuePtr> draw_secret_pair(Rng& rng) {
  if (rng.chance(1, 2)) {
    std::int64_t a = static_cast<std::int64_t>(rng.below(100));
    std::int64_t b = static_cast<std::int64_t>(rng.below(99));
    if (b >= a) ++b;  // distinct
    return {make_int(a), make_int(b)};
  }
  bool first = rng.chance(1, 2);
  return {make_bool(first), make_bool(!first)};
}

}  // namespace

NIVerdict run_pair(const ExprPtr& program, const std::string& hole, ValuePtr v1, ValuePtr v2,
                   const Label& secret_label, const Label& observe, const RunConfig& base) {
  NIVerdict verdict;
  verdict.source = pretty_print(*program);
  verdict.v1 = v1;
  verdict.v2 = v2;

  RunConfig cfg1 = base;
  cfg1.secrets.insert_or_assign(hole, Labeled::for_input(secret_label, v1));
  RunConfig cfg2 = base;
  cfg2.secrets.insert_or_assign(hole, Labeled::for_input(secret_label, v2));

  RunReport r1 = run_program(*program, cfg1);
  RunReport r2 = run_program(*program, cfg2);

  bool t1 = r1.status == RunStatus::Timeout;
  bool t2 = r2.status == RunStatus::Timeout;
  if (t1 && t2) {
    verdict.status = PairStatus::BothTimeout;
    return verdict;
  }
  if (t1 || t2) {
    verdict.status = PairStatus::Skipped;
    return verdict;
  }

  verdict.o1 = low_project(r1, observe);
  verdict.o2 = low_project(r2, observe);
  verdict.status = verdict.o1 == verdict.o2 ? PairStatus::Pass : PairStatus::Fail;
  return verdict;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  CampaignSummary summary;
  summary.pairs = config.pairs;
  summary.vacuity_threshold = config.vacuity_threshold;

  const auto& [hole, secret_label] = config.gen.secrets.at(0);

  RunConfig base;
  base.lattice = config.gen.lattice;
  base.step_budget = config.step_budget;
  base.mutations = config.mutations;

  for (int i = 0; i < config.pairs; ++i) {
    std::uint64_t pair_seed = Rng::mix(config.gen.seed, static_cast<std::uint64_t>(i));
    GenConfig gen_cfg = config.gen;
    gen_cfg.seed = pair_seed;
    ExprPtr program = generate_program(gen_cfg);

    Rng secret_rng(Rng::mix(pair_seed, 0x5ec2e7));
    auto [v1, v2] = draw_secret_pair(secret_rng);

    NIVerdict verdict =
        run_pair(program, hole, v1, v2, secret_label, config.observe, base);
    switch (verdict.status) {
      case PairStatus::Pass: ++summary.pass; break;
      case PairStatus::Fail:
        ++summary.fail;
        summary.failures.push_back(CampaignFailure{
            pair_seed, verdict.source, render_value(*v1, std::nullopt),
            render_value(*v2, std::nullopt)});
        break;
      case PairStatus::BothTimeout: ++summary.both_timeout; break;
      case PairStatus::Skipped: ++summary.skipped; break;
    }
    if (verdict.status == PairStatus::Pass || verdict.status == PairStatus::Fail) {
      if (informative(verdict.o1) || informative(verdict.o2)) ++summary.informative;
    }
  }
  return summary;
}

nlohmann::ordered_json campaign_json(const CampaignSummary& summary) {
  nlohmann::ordered_json out;
  out["pairs"] = summary.pairs;
  out["pass"] = summary.pass;
  out["fail"] = summary.fail;
  out["both_timeout"] = summary.both_timeout;
  out["skipped"] = summary.skipped;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CampaignFailure& f : summary.failures) {
    nlohmann::ordered_json jf;
    jf["seed"] = f.seed;
    jf["source"] = f.source;
    jf["v1"] = f.v1;
    jf["v2"] = f.v2;
    failures.push_back(std::move(jf));
  }
  out["failures"] = std::move(failures);
  return out;
}

RunReport run_confined(const ExprPtr& body, const Label& c, const RunConfig& config) {
  ExprPtr program = make_expr(SourcePos{1, 1},
                              SeqE{make_expr(SourcePos{1, 1}, LowerClearance{c}), body});
  return run_program(*program, config);
}

ConfinementReport check_confinement(const GenConfig& gen, const Label& c, int trials) {
  ConfinementReport report;

  for (int i = 0; i < trials; ++i) {
    std::uint64_t seed = Rng::mix(gen.seed, static_cast<std::uint64_t>(i));
    GenConfig gen_cfg = gen;
    gen_cfg.seed = seed;
    ExprPtr body = generate_program(gen_cfg);

    RunConfig cfg;
    cfg.lattice = gen.lattice;
    Rng secret_rng(Rng::mix(seed, 0xc0f1e));
    for (const auto& [name, label] : gen.secrets) {
      ValuePtr v = secret_rng.chance(1, 2)
                       ? make_int(static_cast<std::int64_t>(secret_rng.below(100)))
                       : make_bool(secret_rng.chance(1, 2));
      cfg.secrets.insert_or_assign(name, Labeled::for_input(label, v));
    }

    RunReport r = run_confined(body, c, cfg);
    ++report.runs;

    auto violation = [&](const std::string& what) {
      report.violations.push_back(ConfinementViolation{seed, pretty_print(*body), what});
    };

    if (r.status == RunStatus::Stop) {
      ++report.stopped_runs;
      if (r.stop->kind == StopKind::ClearanceViolation) ++report.clearance_stops;
    }

    // (a) the run never ends above the lowered clearance
    if (!can_flow_to(r.final_label, c)) {
      violation("final label " + r.final_label.to_string() + " escapes " + c.to_string());
    }

    // (b) nothing above the lowered clearance ever succeeds
    for (const TraceEvent& e : r.trace) {
      bool observing = e.kind == TraceKind::Taint || e.kind == TraceKind::Unlabel ||
                       e.kind == TraceKind::Catch || e.kind == TraceKind::RefRead ||
                       e.kind == TraceKind::RefNew;
      if (observing && !can_flow_to(e.label, c)) {
        violation(std::string(trace_kind_name(e.kind)) + " event at " + e.label.to_string() +
                  " above " + c.to_string());
      }
    }
  }
  return report;
}

std::optional<MonitorMutations> parse_mutation(std::string_view name) {
  MonitorMutations m;
  if (name == "none") return m;
  if (name == "no-unlabel-taint") {
    m.disable_unlabel_taint = true;
    return m;
  }
  if (name == "no-label-check") {
    m.disable_label_check = true;
    return m;
  }
  if (name == "no-tolabeled-check") {
    m.disable_tolabeled_check = true;
    return m;
  }
  return std::nullopt;
}

}  // namespace lio
