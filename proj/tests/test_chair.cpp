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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chair_driver.hpp"
#include "lio/chair.hpp"
#include "lio/rng.hpp"

using namespace lio;
using namespace lio::chair;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string golden_dir() { return LIO_GOLDEN_DIR; }

ChairState three_users() {
  ChairState state;
  state.add_user("carol", true);
  state.add_user("alice", false);
  state.add_user("bob", false);
  return state;
}

}  // namespace

TEST_CASE("users are unique and the chair tag is reserved") {
  ChairState state;
  state.add_user("alice", false);
  CHECK_THROWS_AS(state.add_user("alice", false), ChairError);
  CHECK_THROWS_AS(state.add_user("chair", false), ChairError);
  CHECK(state.has_user("alice"));
  CHECK_FALSE(state.is_chair("alice"));
}

TEST_CASE("submission labels the body for chairs with author integrity") {
  ChairState state = three_users();
  std::string id = state.submit_paper("alice", "T", "text");
  CHECK(id == "p1");
  const Paper& paper = state.papers().at(id);
  CHECK(paper.body.label() == Label::principal(SecrecySet::of({"chair"}), {"alice"}));
  CHECK_THROWS_AS(state.submit_paper("mallory", "T", "text"), ChairError);
}

TEST_CASE("assignment widens the reader set; conflicts exclude") {
  ChairState state = three_users();
  std::string id = state.submit_paper("alice", "T", "text");

  CHECK_FALSE(state.read_paper("bob", id).ok);
  state.assign_reviewer("carol", id, "bob");
  CHECK(state.papers().at(id).body.label() ==
        Label::principal(SecrecySet::of({"bob", "chair"}), {"alice"}));

  ReadResult r = state.read_paper("bob", id);
  CHECK(r.ok);
  CHECK(r.text == "text");
  CHECK(r.session_label == Label::principal(SecrecySet::of({"bob", "chair"}), {}));

  CHECK_THROWS_AS(state.assign_reviewer("bob", id, "bob"), ChairError);  // not a chair

  state.declare_conflict("carol", id, "bob");
  CHECK_FALSE(state.read_paper("bob", id).ok);
  CHECK_THROWS_AS(state.assign_reviewer("carol", id, "bob"), ChairError);
}

TEST_CASE("reviews carry exactly the reviewer's integrity") {
  ChairState state = three_users();
  std::string id = state.submit_paper("alice", "T", "text");
  state.assign_reviewer("carol", id, "bob");
  state.submit_review("bob", id, "fine");
  auto reviews = state.reviews_of(id);
  REQUIRE(reviews.size() == 1);
  CHECK(reviews[0]->content.label().principal_label().integrity ==
        std::set<std::string>{"bob"});

  // Unassigned or conflicted principals cannot submit.
  CHECK_THROWS_AS(state.submit_review("alice", id, "nope"), ChairError);
  state.declare_conflict("carol", id, "bob");
  CHECK_THROWS_AS(state.submit_review("bob", id, "nope"), ChairError);
}

TEST_CASE("review reads are monitor-mediated") {
  ChairState state = three_users();
  state.add_user("dave", false);
  std::string id = state.submit_paper("alice", "T", "text");
  state.assign_reviewer("carol", id, "bob");
  state.submit_review("bob", id, "fine");

  CHECK(state.read_review("carol", id, "bob").ok);
  CHECK(state.read_review("bob", id, "bob").ok);
  CHECK_FALSE(state.read_review("alice", id, "bob").ok);
  CHECK_FALSE(state.read_review("dave", id, "bob").ok);
  CHECK_THROWS_AS(state.read_review("carol", id, "dave"), ChairError);  // no such review
}

TEST_CASE("a conflicted chair loses access to the paper") {
  ChairState state = three_users();
  state.add_user("diane", true);
  std::string id = state.submit_paper("alice", "T", "text");
  state.assign_reviewer("carol", id, "bob");
  state.submit_review("bob", id, "fine");
  CHECK(state.read_review("diane", id, "bob").ok);
  state.declare_conflict("carol", id, "diane");
  CHECK_FALSE(state.read_review("diane", id, "bob").ok);
  CHECK_FALSE(state.read_paper("diane", id).ok);
  // Other chairs keep access through the chair tag.
  CHECK(state.read_review("carol", id, "bob").ok);
}

TEST_CASE("golden scenario transcripts are byte-identical") {
  for (const char* name :
       {"chair_normal_flow", "chair_conflicted_reviewer", "chair_conflict_after_review"}) {
    std::string base = golden_dir() + "/" + name;
    nlohmann::json script = nlohmann::json::parse(read_file(base + ".json"));
    ChairState state;
    std::string transcript = run_script(state, script);
    CHECK_MESSAGE(transcript == read_file(base + ".txt"), name);
  }
}

TEST_CASE("script errors become transcript lines, bad scripts throw") {
  ChairState state;
  nlohmann::json script = nlohmann::json::parse(
      R"([{"op":"add_user","name":"a"},{"op":"add_user","name":"a"}])");
  std::string transcript = run_script(state, script);
  CHECK(transcript.find("[error] add_user: DuplicatePrincipal") != std::string::npos);
  CHECK_THROWS_AS(run_script(state, nlohmann::json::parse(R"([{"op":"fly"}])")), ChairError);
  CHECK_THROWS_AS(run_script(state, nlohmann::json::parse(R"({"op":"fly"})")), ChairError);
}

TEST_CASE("randomized scenarios never leak to conflicted principals") {
  Rng rng(2026);
  for (int sequence = 0; sequence < 150; ++sequence) {
    ChairState state = lio::testing::random_chair_scenario(rng, 40);
    lio::testing::assert_conflict_exclusion(state, [](const std::string& message) {
      FAIL_CHECK(message);
    });
  }
}
