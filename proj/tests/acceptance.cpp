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

// End-to-end acceptance suite. Each criterion prints one line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "chair_driver.hpp"
#include "lio/ni.hpp"
#include "lio/parser.hpp"
#include "lio/printer.hpp"
#include "lio/rng.hpp"
#include "oracles.hpp"

using namespace lio;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> body;
};

Label random_two_point(Rng& rng) { return rng.chance(1, 2) ? Label::low() : Label::high(); }

Label random_principal(Rng& rng) {
  static const std::vector<std::string> universe = {"A", "B", "C", "D"};
  if (rng.chance(1, 10)) {
    std::set<std::string> integrity;
    for (const auto& p : universe)
      if (rng.chance(1, 2)) integrity.insert(p);
    return Label::principal(SecrecySet::all(), integrity);
  }
  std::set<std::string> secrecy, integrity;
  for (const auto& p : universe) {
    if (rng.chance(1, 2)) secrecy.insert(p);
    if (rng.chance(1, 2)) integrity.insert(p);
  }
  return Label::principal(SecrecySet::of(secrecy), integrity);
}

Label random_label(Rng& rng, LatticeKind kind) {
  return kind == LatticeKind::TwoPoint ? random_two_point(rng) : random_principal(rng);
}

// Brute-force inclusion oracle over an explicit universe; shares no code
// with the Label implementation.
bool brute_force_flows(const std::set<std::string>& s1, const std::set<std::string>& i1,
                       const std::set<std::string>& s2, const std::set<std::string>& i2,
                       const std::vector<std::string>& universe) {
  for (const auto& p : universe) {
    if (s1.count(p) > 0 && s2.count(p) == 0) return false;
    if (i2.count(p) > 0 && i1.count(p) == 0) return false;
  }
  return true;
}

std::set<std::string> nth_subset(const std::vector<std::string>& universe, unsigned mask) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask & (1u << i)) out.insert(universe[i]);
  return out;
}

bool criterion_lattice_laws(std::string& detail) {
  long violations = 0;
  for (LatticeKind kind : {LatticeKind::TwoPoint, LatticeKind::Principal}) {
    Rng rng(kind == LatticeKind::TwoPoint ? 1001 : 2002);
    for (int i = 0; i < 10000; ++i) {
      Label a = random_label(rng, kind);
      Label b = random_label(rng, kind);
      Label c = random_label(rng, kind);
      if (!can_flow_to(a, a)) ++violations;
      if (can_flow_to(a, b) && can_flow_to(b, c) && !can_flow_to(a, c)) ++violations;
      if (can_flow_to(a, b) && can_flow_to(b, a) && !(a == b)) ++violations;
      Label j = join(a, b);
      Label m = meet(a, b);
      if (!can_flow_to(a, j) || !can_flow_to(b, j)) ++violations;
      if (!can_flow_to(m, a) || !can_flow_to(m, b)) ++violations;
      if (can_flow_to(a, c) && can_flow_to(b, c) && !can_flow_to(j, c)) ++violations;
      if (can_flow_to(c, a) && can_flow_to(c, b) && !can_flow_to(c, m)) ++violations;
      if (!(join(a, b) == join(b, a)) || !(meet(a, b) == meet(b, a))) ++violations;
      if (!(join(a, join(b, c)) == join(join(a, b), c))) ++violations;
      if (!(meet(a, meet(b, c)) == meet(meet(a, b), c))) ++violations;
      if (!(join(a, a) == a) || !(meet(a, a) == a)) ++violations;
      if (!(join(a, meet(a, b)) == a) || !(meet(a, join(a, b)) == a)) ++violations;
    }
  }

  const std::vector<std::string> universe = {"A", "B", "C", "D"};
  long pairs = 0;
  for (unsigned s1 = 0; s1 < 16; ++s1)
    for (unsigned i1 = 0; i1 < 16; ++i1)
      for (unsigned s2 = 0; s2 < 16; ++s2)
        for (unsigned i2 = 0; i2 < 16; ++i2) {
          auto set_s1 = nth_subset(universe, s1), set_i1 = nth_subset(universe, i1);
          auto set_s2 = nth_subset(universe, s2), set_i2 = nth_subset(universe, i2);
          bool got = can_flow_to(Label::principal(SecrecySet::of(set_s1), set_i1),
                                 Label::principal(SecrecySet::of(set_s2), set_i2));
          if (got != brute_force_flows(set_s1, set_i1, set_s2, set_i2, universe)) ++violations;
          ++pairs;
        }

  std::ostringstream out;
  out << "10000 random triples per lattice, " << pairs << " exhaustive principal pairs, "
      << violations << " violations";
  detail = out.str();
  return violations == 0 && pairs == 65536;
}

bool criterion_ni_campaign(std::string& detail) {
  CampaignConfig two_point;
  two_point.gen.seed = 42;
  two_point.gen.max_depth = 8;
  two_point.pairs = 10000;
  two_point.observe = Label::low();
  CampaignSummary tp = run_campaign(two_point);

  CampaignConfig principal;
  principal.gen.seed = 43;
  principal.gen.max_depth = 8;
  principal.gen.lattice = LatticeKind::Principal;
  principal.gen.secrets = {{"s", Label::secrecy_of({"B"})}};
  principal.observe = Label::secrecy_of({"A"});
  principal.pairs = 5000;
  CampaignSummary pr = run_campaign(principal);

  std::ostringstream out;
  out << "two-point: fail=" << tp.fail << " skipped=" << tp.skipped
      << " informative=" << tp.informative << "/" << tp.pairs
      << "; principal: fail=" << pr.fail << " skipped=" << pr.skipped;
  detail = out.str();
  return tp.fail == 0 && tp.skipped_fraction() < 0.05 && tp.vacuity_ok() && pr.fail == 0 &&
         pr.skipped_fraction() < 0.05 && pr.vacuity_ok();
}

bool criterion_mutation_sensitivity(std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  for (const char* name : {"no-unlabel-taint", "no-label-check", "no-tolabeled-check"}) {
    CampaignConfig cfg;
    cfg.gen.seed = 42;
    cfg.gen.max_depth = 8;
    cfg.pairs = 10000;
    cfg.mutations = *parse_mutation(name);
    CampaignSummary sum = run_campaign(cfg);
    out << name << ": fail=" << sum.fail << "  ";
    ok = ok && sum.fail >= 1;
  }
  detail = out.str();
  return ok;
}

bool criterion_confinement(std::string& detail) {
  GenConfig gen;
  gen.seed = 7;
  gen.max_depth = 6;
  ConfinementReport report = check_confinement(gen, Label::low(), 1000);
  std::ostringstream out;
  out << report.runs << " bodies, " << report.clearance_stops << " clearance stops, "
      << report.violations.size() << " violations";
  if (!report.violations.empty()) {
    out << "; first: " << report.violations[0].what;
  }
  detail = out.str();
  return report.runs == 1000 && report.ok();
}

bool criterion_straight_line_oracle(std::string& detail) {
  int matched = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    LatticeKind lattice = i % 2 == 0 ? LatticeKind::TwoPoint : LatticeKind::Principal;
    Label secret_label =
        lattice == LatticeKind::TwoPoint ? Label::high() : Label::secrecy_of({"B"});
    std::uint64_t seed = Rng::mix(404, static_cast<std::uint64_t>(i));
    ExprPtr program = generate_straight_line(seed, lattice, "s", secret_label, 2 + (i % 5));

    RunConfig cfg;
    cfg.lattice = lattice;
    cfg.secrets.insert_or_assign("s", Labeled::for_input(secret_label, make_int(7)));
    RunReport r = run_program(*program, cfg);

    Label expected = lio::testing::straight_line_label_oracle(
        *program, default_initial_label(lattice), {{"s", secret_label}});
    if (r.status == RunStatus::Value && r.final_label == expected) ++matched;
  }
  std::ostringstream out;
  out << matched << "/" << total << " final labels equal the fold-join oracle";
  detail = out.str();
  return matched == total;
}

bool criterion_reference_truth_table(std::string& detail) {
  auto lvl = [](int bit) { return bit ? Label::high() : Label::low(); };
  int rows = 0, mismatches = 0;
  for (int cur = 0; cur <= 1; ++cur) {
    for (int clr = 0; clr <= 1; ++clr) {
      for (int ref = 0; ref <= 1; ++ref) {
        ++rows;
        bool expect_new = cur <= ref && ref <= clr && cur <= clr;
        bool expect_write = cur <= ref && ref <= clr && cur <= clr;
        bool expect_read = std::max(cur, ref) <= clr && cur <= clr;

        if (cur > clr) {
          bool constructible = true;
          try {
            Context bad(lvl(cur), lvl(clr));
          } catch (const MonitorStop&) {
            constructible = false;
          }
          if (constructible || expect_new || expect_write || expect_read) ++mismatches;
          continue;
        }

        auto try_op = [&](const std::function<void(Context&, RefHandle)>& op) {
          Context ctx(Label::low(), Label::high());
          RefHandle r = ctx.new_ref(lvl(ref), make_int(1));
          if (clr == 0) ctx.lower_clearance(Label::low());
          ctx.taint(lvl(cur));
          try {
            op(ctx, r);
            return true;
          } catch (const MonitorStop&) {
            return false;
          }
        };

        bool got_new = [&] {
          Context ctx(lvl(cur), lvl(clr));
          try {
            static_cast<void>(ctx.new_ref(lvl(ref), make_int(1)));
            return true;
          } catch (const MonitorStop&) {
            return false;
          }
        }();
        bool got_read =
            try_op([](Context& ctx, RefHandle r) { static_cast<void>(ctx.read_ref(r)); });
        bool got_write = try_op([](Context& ctx, RefHandle r) { ctx.write_ref(r, make_int(2)); });

        if (got_new != expect_new || got_read != expect_read || got_write != expect_write) {
          ++mismatches;
        }
      }
    }
  }
  std::ostringstream out;
  out << rows << " (cur, ref, clearance) rows x {new, read, write}, " << mismatches
      << " mismatches";
  detail = out.str();
  return rows == 8 && mismatches == 0;
}

bool criterion_failure_atomicity(std::string& detail) {
  Rng rng(9090);
  long failed_calls = 0, broken = 0;
  for (int seq = 0; seq < 5000; ++seq) {
    LatticeKind kind = rng.chance(1, 3) ? LatticeKind::Principal : LatticeKind::TwoPoint;
    Label clearance = rng.chance(1, 4) ? default_initial_label(kind) : default_clearance(kind);
    Context ctx(default_initial_label(kind), clearance);
    std::vector<RefHandle> refs;
    std::vector<Labeled> pool;
    pool.push_back(Labeled::for_input(random_label(rng, kind), make_int(1)));

    for (int i = 0; i < 10; ++i) {
      Label l = random_label(rng, kind);
      ContextSnapshot before = ctx.snapshot();
      bool failed = false;
      try {
        switch (rng.below(7)) {
          case 0: ctx.taint(l); break;
          case 1: pool.push_back(ctx.make_labeled(l, make_int(i))); break;
          case 2: static_cast<void>(ctx.unlabel(pool[rng.below(pool.size())])); break;
          case 3: ctx.lower_clearance(l); break;
          case 4: refs.push_back(ctx.new_ref(l, make_int(i))); break;
          case 5:
            if (!refs.empty()) static_cast<void>(ctx.read_ref(refs[rng.below(refs.size())]));
            break;
          default:
            if (!refs.empty()) ctx.write_ref(refs[rng.below(refs.size())], make_int(i));
            break;
        }
      } catch (const MonitorStop&) {
        failed = true;
      } catch (const LatticeMismatchError&) {
        failed = true;
      }
      if (failed) {
        ++failed_calls;
        if (!(ctx.snapshot() == before)) ++broken;
      }
    }
  }
  std::ostringstream out;
  out << failed_calls << " failed calls across 5000 sequences, " << broken
      << " changed state on failure";
  detail = out.str();
  return failed_calls > 0 && broken == 0;
}

bool criterion_chair_scenarios(std::string& detail) {
  auto read_file = [](const std::string& path) -> std::optional<std::string> {
    std::ifstream in(path);
    if (!in.good()) return std::nullopt;
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };

  int golden_ok = 0;
  for (const char* name :
       {"chair_normal_flow", "chair_conflicted_reviewer", "chair_conflict_after_review"}) {
    std::string base = std::string(LIO_GOLDEN_DIR) + "/" + name;
    auto script_text = read_file(base + ".json");
    auto expected = read_file(base + ".txt");
    if (!script_text || !expected) continue;
    chair::ChairState state;
    std::string transcript = chair::run_script(state, nlohmann::json::parse(*script_text));
    if (transcript == *expected) ++golden_ok;
  }

  long leaks = 0;
  Rng rng(31337);
  for (int sequence = 0; sequence < 500; ++sequence) {
    chair::ChairState state = lio::testing::random_chair_scenario(rng, 40);
    lio::testing::assert_conflict_exclusion(state, [&](const std::string&) { ++leaks; });
  }

  std::ostringstream out;
  out << golden_ok << "/3 golden transcripts byte-identical, " << leaks
      << " leaks in 500 random sequences";
  detail = out.str();
  return golden_ok == 3 && leaks == 0;
}

bool criterion_parser_round_trip(std::string& detail) {
  Rng rng(77);
  int mismatches = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    cfg.max_depth = 2 + static_cast<int>(rng.below(5));
    cfg.lattice = rng.chance(1, 3) ? LatticeKind::Principal : LatticeKind::TwoPoint;
    ExprPtr program = generate_program(cfg);
    std::string printed = pretty_print(*program);
    try {
      if (pretty_print(*parse_program(printed)) != printed) ++mismatches;
    } catch (const std::exception&) {
      ++mismatches;
    }
  }
  std::ostringstream out;
  out << total << " generated programs, " << mismatches << " fixpoint mismatches";
  detail = out.str();
  return mismatches == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "lattice law suite (random + exhaustive oracle)", criterion_lattice_laws},
      {2, "noninterference campaigns (10000 two-point + 5000 principal pairs)",
       criterion_ni_campaign},
      {3, "mutation sensitivity (three broken monitors)", criterion_mutation_sensitivity},
      {4, "confinement suite (1000 bodies under lowered clearance)", criterion_confinement},
      {5, "straight-line label oracle (1000 programs)", criterion_straight_line_oracle},
      {6, "reference truth table (exhaustive two-point)", criterion_reference_truth_table},
      {7, "failure atomicity (5000 randomized sequences)", criterion_failure_atomicity},
      {8, "reviewing scenarios (3 golden + 500 random sequences)", criterion_chair_scenarios},
      {9, "parser round-trip fixpoint (1000 programs)", criterion_parser_round_trip},
  };

  // Wall-clock bounds from the acceptance contract.
  const double time_limit[] = {0, 10.0, 120.0, 1e9, 1e9, 1e9, 1e9, 1e9, 1e9, 1e9};

  bool all_ok = true;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = criterion.body(detail);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit[criterion.number]) {
      ok = false;
      detail += " [over time budget]";
    }
    std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), detail.c_str(), secs);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
