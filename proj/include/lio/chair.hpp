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

#ifndef LIO_CHAIR_HPP_
#define LIO_CHAIR_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lio/runtime.hpp"

namespace lio::chair {

/**
 * Conference reviewing demo on top of the monitor.
 *
 * Principals are registered dynamically; chairs additionally hold the
 * distinguished tag "chair". Paper bodies are labeled
 * <{chair ∪ assigned reviewers}|{author}> and review contents
 * <{chair ∪ assigned reviewers − conflicted}|{reviewer}>, so secrecy names
 * the reader set and integrity pins who vouches for the text.
 *
 * Reads run in a per-operation session context confined by the acting
 * user's clearance: their own tag, the chair tag if they hold it, and the
 * paper's reader tags when they are a reader themselves. A conflicted
 * principal's session for that paper is stripped down to their own tag, so
 * the monitor — not ad-hoc checks — denies them. Mutating operations run
 * in a trusted session carrying the acting user's integrity; conflict
 * revocation narrows reader sets by re-minting affected values, the one
 * relabeling the monitor itself cannot express.
 */

enum class ChairErrorKind {
  DuplicatePrincipal,
  UnknownPrincipal,
  UnknownPaper,
  UnknownReview,
  NotChair,
  ConflictExists,
  NotAssigned,
  BadScript,
};

struct ChairError {
  ChairErrorKind kind;
  std::string message;
};

std::string_view chair_error_name(ChairErrorKind kind);

struct Paper {
  std::string id;
  std::string title;
  std::string author;
  Labeled body;
};

struct Review {
  std::string paper_id;
  std::string reviewer;
  Labeled content;
};

struct ReadResult {
  bool ok = false;
  std::string text;          // on success
  std::string denial;        // stop kind name on denial
  Label session_label;       // session label after the read
};

class ChairState {
 public:
  static constexpr const char* kChairTag = "chair";

  ChairState();

  void add_user(const std::string& name, bool is_chair);
  std::string submit_paper(const std::string& author, const std::string& title,
                           const std::string& body);
  void assign_reviewer(const std::string& acting, const std::string& paper_id,
                       const std::string& reviewer);
  void declare_conflict(const std::string& acting, const std::string& paper_id,
                        const std::string& principal);
  void submit_review(const std::string& reviewer, const std::string& paper_id,
                     const std::string& text);

  ReadResult read_paper(const std::string& user, const std::string& paper_id) const;
  ReadResult read_review(const std::string& user, const std::string& paper_id,
                         const std::string& reviewer) const;

  // Policy introspection, used by the transcript and the property driver.
  bool has_user(const std::string& name) const;
  bool is_chair(const std::string& name) const;
  std::set<std::string> reader_tags(const std::string& paper_id) const;
  Label session_clearance(const std::string& user, const std::string& paper_id) const;
  const std::map<std::string, Paper>& papers() const { return papers_; }
  std::vector<const Review*> reviews_of(const std::string& paper_id) const;
  const std::set<std::string>& conflicted(const std::string& paper_id) const;
  const std::set<std::string>& assigned(const std::string& paper_id) const;
  std::vector<std::string> user_names() const;

 private:
  const Paper& require_paper(const std::string& paper_id) const;
  Paper& require_paper(const std::string& paper_id);
  void require_user(const std::string& name) const;
  void require_chair(const std::string& name) const;

  Label body_label(const std::string& paper_id, const std::string& author) const;
  Label review_label(const std::string& paper_id, const std::string& reviewer) const;

  // Mints a fresh labeled value through a trusted session that carries the
  // author's integrity.
  Labeled mint(const Label& label, const std::string& integrity_holder,
               const std::string& text) const;

  // Monitor-mediated read of the old payload plus a policy-level relabel.
  Labeled relabel(const Labeled& old, const Label& new_label) const;

  // Re-mints the paper body and every review of the paper at the current
  // reader set.
  void refresh_labels(const std::string& paper_id);

  std::map<std::string, bool> users_;  // name -> holds chair tag
  std::map<std::string, Paper> papers_;
  std::map<std::string, std::map<std::string, Review>> reviews_;  // paper -> reviewer -> review
  std::map<std::string, std::set<std::string>> assigned_;
  std::map<std::string, std::set<std::string>> conflicts_;
  int next_paper_ = 1;
};

// Applies a JSON array of operations, returning the transcript. Errors and
// denials become transcript lines; a malformed script throws ChairError.
std::string run_script(ChairState& state, const nlohmann::json& script);

}  // namespace lio::chair

#endif  // LIO_CHAIR_HPP_
