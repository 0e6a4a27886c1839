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

#ifndef LIO_NI_HPP_
#define LIO_NI_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lio/gen.hpp"
#include "lio/project.hpp"

namespace lio {

// Empirical noninterference: run the same program twice, differing only in
// one secret's value, and compare what a bounded observer sees (outcome
// and projected trace). Timeouts follow the termination-insensitive rule:
// one-sided timeouts are skipped, double timeouts counted separately.

enum class PairStatus { Pass, Fail, BothTimeout, Skipped };

struct NIVerdict {
  PairStatus status = PairStatus::Pass;
  std::string source;
  ValuePtr v1;
  ValuePtr v2;
  Observation o1;
  Observation o2;
};

NIVerdict run_pair(const ExprPtr& program, const std::string& hole, ValuePtr v1, ValuePtr v2,
                   const Label& secret_label, const Label& observe, const RunConfig& base);

struct CampaignConfig {
  GenConfig gen;
  int pairs = 1000;
  Label observe = Label::low();
  MonitorMutations mutations;
  std::size_t step_budget = 100000;
  // Minimum fraction of pairs whose observation reacts to the program at
  // all; guards against a degenerate observe level making every
  // comparison vacuously equal.
  double vacuity_threshold = 0.30;
};

struct CampaignFailure {
  std::uint64_t seed = 0;
  std::string source;
  std::string v1;
  std::string v2;
};

struct CampaignSummary {
  int pairs = 0;
  int pass = 0;
  int fail = 0;
  int both_timeout = 0;
  int skipped = 0;
  int informative = 0;
  double vacuity_threshold = 0.30;
  std::vector<CampaignFailure> failures;

  double informative_fraction() const {
    return pairs == 0 ? 0.0 : static_cast<double>(informative) / pairs;
  }
  bool vacuity_ok() const { return informative_fraction() >= vacuity_threshold; }
  double skipped_fraction() const {
    return pairs == 0 ? 0.0 : static_cast<double>(skipped) / pairs;
  }
};

CampaignSummary run_campaign(const CampaignConfig& config);

nlohmann::ordered_json campaign_json(const CampaignSummary& summary);

// Runs `lowerClearance c; body` under the given config.
RunReport run_confined(const ExprPtr& body, const Label& c, const RunConfig& config);

struct ConfinementViolation {
  std::uint64_t seed = 0;
  std::string source;
  std::string what;
};

struct ConfinementReport {
  int runs = 0;
  int stopped_runs = 0;      // runs the monitor cut
  int clearance_stops = 0;   // of those, clearance violations
  std::vector<ConfinementViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Generates `trials` bodies and asserts the confinement property: after
// lowering the clearance to c, no successful observation or resource
// creation above c and no final label above c.
ConfinementReport check_confinement(const GenConfig& gen, const Label& c, int trials);

std::optional<MonitorMutations> parse_mutation(std::string_view name);

}  // namespace lio

#endif  // LIO_NI_HPP_
