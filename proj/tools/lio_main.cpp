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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lio/chair.hpp"
#include "lio/ni.hpp"
#include "lio/parser.hpp"
#include "lio/printer.hpp"
#include "lio/project.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMonitorStop = 2;
constexpr int kExitUncaught = 3;
constexpr int kExitTimeout = 4;

struct SecretSpec {
  std::string name;
  lio::Label label;
  lio::ValuePtr value;
};

// NAME=LABEL:VALUE, e.g. s=H:41, flag=<{A}|{}>:true, word=H:"text"
SecretSpec parse_secret(const std::string& spec) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw CLI::ValidationError("--secret", "expected NAME=LABEL:VALUE, got '" + spec + "'");
  }
  std::string name = spec.substr(0, eq);
  std::string rest = spec.substr(eq + 1);
  // The label syntax contains no ':', so the first colon splits it off.
  std::size_t colon = rest.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("--secret", "expected NAME=LABEL:VALUE, got '" + spec + "'");
  }
  lio::Label label;
  try {
    label = lio::parse_label(rest.substr(0, colon));
  } catch (const lio::LabelParseError& e) {
    throw CLI::ValidationError("--secret", e.what());
  }
  std::string raw = rest.substr(colon + 1);
  lio::ValuePtr value;
  if (raw == "true" || raw == "false") {
    value = lio::make_bool(raw == "true");
  } else if (!raw.empty() && raw.front() == '"' && raw.back() == '"' && raw.size() >= 2) {
    value = lio::make_str(raw.substr(1, raw.size() - 2));
  } else {
    try {
      value = lio::make_int(std::stoll(raw));
    } catch (const std::exception&) {
      value = lio::make_str(raw);
    }
  }
  return SecretSpec{std::move(name), std::move(label), std::move(value)};
}

lio::Label parse_label_flag(const std::string& text, const std::string& flag) {
  try {
    return lio::parse_label(text);
  } catch (const lio::LabelParseError& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw CLI::ValidationError("file", "cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int cmd_run(const std::string& file, const std::string& lattice_name,
            const std::optional<std::string>& init_label, const std::optional<std::string>& clearance,
            const std::vector<std::string>& secret_specs, const std::optional<std::string>& observe,
            const std::optional<std::string>& trace_out, std::size_t step_budget,
            const std::string& mutation) {
  lio::RunConfig cfg;
  cfg.lattice =
      lattice_name == "principal" ? lio::LatticeKind::Principal : lio::LatticeKind::TwoPoint;
  cfg.step_budget = step_budget;
  if (init_label) cfg.initial_label = parse_label_flag(*init_label, "--init-label");
  if (clearance) cfg.clearance = parse_label_flag(*clearance, "--clearance");
  auto mutations = lio::parse_mutation(mutation);
  if (!mutations) {
    std::cerr << "error: unknown mutation '" << mutation << "'\n";
    return kExitUsage;
  }
  cfg.mutations = *mutations;

  for (const std::string& spec : secret_specs) {
    SecretSpec s = parse_secret(spec);
    cfg.secrets.insert_or_assign(s.name, lio::Labeled::for_input(s.label, s.value));
  }

  lio::ExprPtr program;
  try {
    program = lio::parse_program(slurp(file));
  } catch (const lio::LexError& e) {
    std::cerr << file << ":" << e.pos.line << ":" << e.pos.column << ": lex error: " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const lio::ParseError& e) {
    std::cerr << file << ":" << e.pos.line << ":" << e.pos.column << ": parse error: " << e.what()
              << "\n";
    return kExitUsage;
  }

  for (const std::string& hole : lio::secret_holes(*program)) {
    if (cfg.secrets.find(hole) == cfg.secrets.end()) {
      std::cerr << "error: program uses `secret " << hole << "` but no --secret " << hole
                << "=LABEL:VALUE was given\n";
      return kExitUsage;
    }
  }

  lio::RunReport report = lio::run_program(*program, cfg);

  if (trace_out) {
    std::ofstream out(*trace_out);
    out << lio::trace_json(report, cfg.lattice).dump(2) << "\n";
  }

  if (observe) {
    lio::Label observer = parse_label_flag(*observe, "--observe");
    std::cout << "observation @" << observer.to_string() << ": "
              << lio::low_project(report, observer).to_string() << "\n";
  }

  switch (report.status) {
    case lio::RunStatus::Value:
      std::cout << "value: " << lio::render_value(*report.value, std::nullopt) << "\n";
      std::cout << "final label: " << report.final_label.to_string()
                << "  clearance: " << report.final_clearance.to_string() << "\n";
      return kExitOk;
    case lio::RunStatus::Uncaught:
      std::cout << "uncaught exception at " << report.uncaught->label.to_string() << ": "
                << (report.uncaught->payload
                        ? lio::render_value(*report.uncaught->payload, std::nullopt)
                        : "")
                << "\n";
      return kExitUncaught;
    case lio::RunStatus::Stop:
      std::cout << "monitor stop: " << lio::stop_kind_name(report.stop->kind) << " at "
                << report.stop->pos.line << ":" << report.stop->pos.column << " ("
                << report.stop->detail << ")\n";
      return kExitMonitorStop;
    case lio::RunStatus::Timeout:
      std::cout << "timeout: step budget exceeded\n";
      return kExitTimeout;
  }
  return kExitOk;
}

int cmd_ni_check(int pairs, int depth, std::uint64_t seed, const std::string& lattice_name,
                 const std::string& observe_text, const std::string& mutation,
                 const std::optional<std::string>& json_out,
                 const std::optional<std::string>& secret_label_text) {
  lio::CampaignConfig cfg;
  cfg.pairs = pairs;
  cfg.gen.seed = seed;
  cfg.gen.max_depth = depth;
  cfg.gen.lattice =
      lattice_name == "principal" ? lio::LatticeKind::Principal : lio::LatticeKind::TwoPoint;
  cfg.observe = parse_label_flag(observe_text, "--observe");

  lio::Label secret_label = cfg.gen.lattice == lio::LatticeKind::TwoPoint
                                ? lio::Label::high()
                                : lio::Label::secrecy_of({"B"});
  if (secret_label_text) secret_label = parse_label_flag(*secret_label_text, "--secret-label");
  cfg.gen.secrets = {{"s", secret_label}};

  try {
    if (lio::can_flow_to(secret_label, cfg.observe)) {
      std::cerr << "error: secret label " << secret_label.to_string()
                << " flows to the observation level; the comparison would be vacuous\n";
      return kExitUsage;
    }
  } catch (const lio::LatticeMismatchError&) {
    std::cerr << "error: secret label and observation level use different lattices\n";
    return kExitUsage;
  }

  auto mutations = lio::parse_mutation(mutation);
  if (!mutations) {
    std::cerr << "error: unknown mutation '" << mutation
              << "' (expected none, no-unlabel-taint, no-label-check, no-tolabeled-check)\n";
    return kExitUsage;
  }
  cfg.mutations = *mutations;

  lio::CampaignSummary summary = lio::run_campaign(cfg);

  std::cout << "pairs=" << summary.pairs << " pass=" << summary.pass << " fail=" << summary.fail
            << " both_timeout=" << summary.both_timeout << " skipped=" << summary.skipped
            << " informative=" << summary.informative << "\n";
  for (const lio::CampaignFailure& f : summary.failures) {
    std::cout << "FAIL seed=" << f.seed << " v1=" << f.v1 << " v2=" << f.v2 << "\n  " << f.source
              << "\n";
  }
  if (!summary.vacuity_ok()) {
    std::cout << "warning: only " << summary.informative << "/" << summary.pairs
              << " observations were informative (threshold "
              << summary.vacuity_threshold << ")\n";
  }

  if (json_out) {
    std::ofstream out(*json_out);
    out << lio::campaign_json(summary).dump(2) << "\n";
  }
  return summary.fail > 0 ? kExitMonitorStop : kExitOk;
}

int cmd_chair_demo(const std::string& script_path, const std::optional<std::string>& golden) {
  nlohmann::json script;
  try {
    script = nlohmann::json::parse(slurp(script_path));
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << script_path << " is not valid JSON: " << e.what() << "\n";
    return kExitUsage;
  }

  lio::chair::ChairState state;
  std::string transcript;
  try {
    transcript = lio::chair::run_script(state, script);
  } catch (const lio::chair::ChairError& e) {
    std::cerr << "script error: " << lio::chair::chair_error_name(e.kind) << ": " << e.message
              << "\n";
    return kExitUsage;
  }
  std::cout << transcript;

  if (golden) {
    std::string expected = slurp(*golden);
    if (transcript != expected) {
      std::cerr << "transcript differs from golden file " << *golden << "\n";
      return kExitMonitorStop;
    }
    std::cerr << "transcript matches " << *golden << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lio - a floating-label information-flow runtime"};
  app.require_subcommand(1);

  // run
  std::string run_file, run_lattice = "two-point", run_mutation = "none";
  std::optional<std::string> run_init, run_clearance, run_observe, run_trace;
  std::vector<std::string> run_secrets;
  std::size_t run_budget = 100000;
  CLI::App* run = app.add_subcommand("run", "evaluate a .lio program");
  run->add_option("file", run_file, "program file")->required();
  run->add_option("--lattice", run_lattice, "two-point or principal")
      ->check(CLI::IsMember({"two-point", "principal"}));
  run->add_option("--init-label", run_init, "initial current label");
  run->add_option("--clearance", run_clearance, "initial clearance");
  run->add_option("--secret", run_secrets, "NAME=LABEL:VALUE binding for `secret NAME`");
  run->add_option("--observe", run_observe, "also print the observation at this label");
  run->add_option("--trace", run_trace, "write the trace JSON here");
  run->add_option("--step-budget", run_budget, "evaluation step budget");
  run->add_option("--mutation", run_mutation, "monitor mutation (testing)");

  // ni-check
  int ni_pairs = 1000, ni_depth = 8;
  std::uint64_t ni_seed = 0;
  std::string ni_lattice = "two-point", ni_observe = "L", ni_mutation = "none";
  std::optional<std::string> ni_json, ni_secret_label;
  CLI::App* ni = app.add_subcommand("ni-check", "paired-execution noninterference campaign");
  ni->add_option("--pairs", ni_pairs, "number of generated pairs");
  ni->add_option("--depth", ni_depth, "max AST depth");
  ni->add_option("--seed", ni_seed, "campaign seed");
  ni->add_option("--lattice", ni_lattice, "two-point or principal")
      ->check(CLI::IsMember({"two-point", "principal"}));
  ni->add_option("--observe", ni_observe, "observation label");
  ni->add_option("--secret-label", ni_secret_label, "label of the varied secret");
  ni->add_option("--mutation", ni_mutation, "monitor mutation to inject");
  ni->add_option("--json", ni_json, "write the summary JSON here");

  // chair-demo
  std::string chair_script;
  std::optional<std::string> chair_golden;
  CLI::App* chair = app.add_subcommand("chair-demo", "run a reviewing scenario script");
  chair->add_option("script", chair_script, "JSON array of operations")->required();
  chair->add_option("--golden", chair_golden, "compare the transcript against this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_file, run_lattice, run_init, run_clearance, run_secrets, run_observe,
                     run_trace, run_budget, run_mutation);
    }
    if (ni->parsed()) {
      return cmd_ni_check(ni_pairs, ni_depth, ni_seed, ni_lattice, ni_observe, ni_mutation,
                          ni_json, ni_secret_label);
    }
    if (chair->parsed()) {
      return cmd_chair_demo(chair_script, chair_golden);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
