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

#include "lio/chair.hpp"

#include <sstream>

namespace lio::chair {

namespace {

Label trusted_clearance() { return Label::principal(SecrecySet::all(), {}); }

Label acting_label(const std::string& user) {
  return Label::principal(SecrecySet::of({}), {user});
}

const std::set<std::string> kEmpty;

}  // namespace

std::string_view chair_error_name(ChairErrorKind kind) {
  switch (kind) {
    case ChairErrorKind::DuplicatePrincipal: return "DuplicatePrincipal";
    case ChairErrorKind::UnknownPrincipal: return "UnknownPrincipal";
    case ChairErrorKind::UnknownPaper: return "UnknownPaper";
    case ChairErrorKind::UnknownReview: return "UnknownReview";
    case ChairErrorKind::NotChair: return "NotChair";
    case ChairErrorKind::ConflictExists: return "ConflictExists";
    case ChairErrorKind::NotAssigned: return "NotAssigned";
    case ChairErrorKind::BadScript: return "BadScript";
  }
  return "?";
}

ChairState::ChairState() {
  // The chair tag itself is a principal; registering it here keeps user
  // names from colliding with it.
  users_.emplace(kChairTag, false);
}

void ChairState::require_user(const std::string& name) const {
  if (users_.find(name) == users_.end()) {
    throw ChairError{ChairErrorKind::UnknownPrincipal, "unknown principal '" + name + "'"};
  }
}

void ChairState::require_chair(const std::string& name) const {
  require_user(name);
  if (!users_.at(name)) {
    throw ChairError{ChairErrorKind::NotChair, "'" + name + "' does not hold the chair tag"};
  }
}

const Paper& ChairState::require_paper(const std::string& paper_id) const {
  auto it = papers_.find(paper_id);
  if (it == papers_.end()) {
    throw ChairError{ChairErrorKind::UnknownPaper, "unknown paper '" + paper_id + "'"};
  }
  return it->second;
}

Paper& ChairState::require_paper(const std::string& paper_id) {
  auto it = papers_.find(paper_id);
  if (it == papers_.end()) {
    throw ChairError{ChairErrorKind::UnknownPaper, "unknown paper '" + paper_id + "'"};
  }
  return it->second;
}

bool ChairState::has_user(const std::string& name) const { return users_.count(name) > 0; }

bool ChairState::is_chair(const std::string& name) const {
  auto it = users_.find(name);
  return it != users_.end() && it->second;
}

const std::set<std::string>& ChairState::conflicted(const std::string& paper_id) const {
  auto it = conflicts_.find(paper_id);
  return it == conflicts_.end() ? kEmpty : it->second;
}

const std::set<std::string>& ChairState::assigned(const std::string& paper_id) const {
  auto it = assigned_.find(paper_id);
  return it == assigned_.end() ? kEmpty : it->second;
}

std::vector<std::string> ChairState::user_names() const {
  std::vector<std::string> out;
  for (const auto& [name, chairness] : users_) {
    if (name != kChairTag) out.push_back(name);
  }
  return out;
}

std::set<std::string> ChairState::reader_tags(const std::string& paper_id) const {
  std::set<std::string> tags = {kChairTag};
  for (const std::string& r : assigned(paper_id)) tags.insert(r);
  for (const std::string& c : conflicted(paper_id)) tags.erase(c);
  return tags;
}

Label ChairState::session_clearance(const std::string& user, const std::string& paper_id) const {
  std::set<std::string> may_read = {user};
  if (conflicted(paper_id).count(user) == 0) {
    if (is_chair(user)) may_read.insert(kChairTag);
    std::set<std::string> readers = reader_tags(paper_id);
    bool is_reader = (is_chair(user) && readers.count(kChairTag) > 0) || readers.count(user) > 0;
    if (is_reader) may_read.insert(readers.begin(), readers.end());
  }
  return Label::principal(SecrecySet::of(std::move(may_read)), {});
}

Label ChairState::body_label(const std::string& paper_id, const std::string& author) const {
  return Label::principal(SecrecySet::of(reader_tags(paper_id)), {author});
}

Label ChairState::review_label(const std::string& paper_id, const std::string& reviewer) const {
  return Label::principal(SecrecySet::of(reader_tags(paper_id)), {reviewer});
}

Labeled ChairState::mint(const Label& label, const std::string& integrity_holder,
                         const std::string& text) const {
  Context session(acting_label(integrity_holder), trusted_clearance());
  return session.make_labeled(label, make_str(text));
}

Labeled ChairState::relabel(const Labeled& old, const Label& new_label) const {
  const std::set<std::string>& integrity = old.label().principal_label().integrity;
  Context session(Label::principal(SecrecySet::of({}), integrity), trusted_clearance());
  ValuePtr payload = session.unlabel(old);
  return Labeled::for_input(new_label, std::move(payload));
}

void ChairState::refresh_labels(const std::string& paper_id) {
  Paper& paper = require_paper(paper_id);
  paper.body = relabel(paper.body, body_label(paper_id, paper.author));
  auto reviews = reviews_.find(paper_id);
  if (reviews == reviews_.end()) return;
  for (auto& [reviewer, review] : reviews->second) {
    review.content = relabel(review.content, review_label(paper_id, reviewer));
  }
}

void ChairState::add_user(const std::string& name, bool is_chair) {
  if (name.empty()) {
    throw ChairError{ChairErrorKind::BadScript, "principal names must be non-empty"};
  }
  auto [it, inserted] = users_.emplace(name, is_chair);
  if (!inserted) {
    throw ChairError{ChairErrorKind::DuplicatePrincipal, "principal '" + name + "' exists"};
  }
}

std::string ChairState::submit_paper(const std::string& author, const std::string& title,
                                     const std::string& body) {
  require_user(author);
  std::string id = "p" + std::to_string(next_paper_++);
  Labeled labeled_body = mint(body_label(id, author), author, body);
  papers_.emplace(id, Paper{id, title, author, std::move(labeled_body)});
  return id;
}

void ChairState::assign_reviewer(const std::string& acting, const std::string& paper_id,
                                 const std::string& reviewer) {
  require_chair(acting);
  require_paper(paper_id);
  require_user(reviewer);
  if (conflicted(paper_id).count(reviewer) > 0) {
    throw ChairError{ChairErrorKind::ConflictExists,
                     "'" + reviewer + "' is conflicted with " + paper_id};
  }
  assigned_[paper_id].insert(reviewer);
  refresh_labels(paper_id);
}

void ChairState::declare_conflict(const std::string& acting, const std::string& paper_id,
                                  const std::string& principal) {
  require_chair(acting);
  require_paper(paper_id);
  require_user(principal);
  conflicts_[paper_id].insert(principal);
  refresh_labels(paper_id);
}

void ChairState::submit_review(const std::string& reviewer, const std::string& paper_id,
                               const std::string& text) {
  require_user(reviewer);
  require_paper(paper_id);
  if (assigned(paper_id).count(reviewer) == 0 || conflicted(paper_id).count(reviewer) > 0) {
    throw ChairError{ChairErrorKind::NotAssigned,
                     "'" + reviewer + "' is not an active reviewer of " + paper_id};
  }
  Labeled content = mint(review_label(paper_id, reviewer), reviewer, text);
  reviews_[paper_id].insert_or_assign(reviewer,
                                      Review{paper_id, reviewer, std::move(content)});
}

std::vector<const Review*> ChairState::reviews_of(const std::string& paper_id) const {
  std::vector<const Review*> out;
  auto it = reviews_.find(paper_id);
  if (it == reviews_.end()) return out;
  for (const auto& [reviewer, review] : it->second) out.push_back(&review);
  return out;
}

namespace {

// Confined read: the unlabel succeeds or the monitor stops the session.
ReadResult confined_read(const Label& initial, const Label& clearance, const Labeled& value) {
  ReadResult result;
  try {
    Context session(initial, clearance);
    ValuePtr payload = session.unlabel(value);
    result.ok = true;
    result.text = *value_as<std::string>(payload);
    result.session_label = session.current_label();
  } catch (const MonitorStop& s) {
    result.ok = false;
    result.denial = std::string(stop_kind_name(s.kind));
  }
  return result;
}

}  // namespace

ReadResult ChairState::read_paper(const std::string& user, const std::string& paper_id) const {
  require_user(user);
  const Paper& paper = require_paper(paper_id);
  return confined_read(acting_label(user), session_clearance(user, paper_id), paper.body);
}

ReadResult ChairState::read_review(const std::string& user, const std::string& paper_id,
                                   const std::string& reviewer) const {
  require_user(user);
  require_paper(paper_id);
  auto paper_reviews = reviews_.find(paper_id);
  if (paper_reviews == reviews_.end() ||
      paper_reviews->second.find(reviewer) == paper_reviews->second.end()) {
    throw ChairError{ChairErrorKind::UnknownReview,
                     "no review of " + paper_id + " by '" + reviewer + "'"};
  }
  const Review& review = paper_reviews->second.at(reviewer);
  return confined_read(acting_label(user), session_clearance(user, paper_id), review.content);
}

namespace {

std::string need_str(const nlohmann::json& op, const char* field) {
  if (!op.contains(field) || !op[field].is_string()) {
    throw ChairError{ChairErrorKind::BadScript,
                     std::string("operation needs string field '") + field + "'"};
  }
  return op[field].get<std::string>();
}

}  // namespace

std::string run_script(ChairState& state, const nlohmann::json& script) {
  if (!script.is_array()) {
    throw ChairError{ChairErrorKind::BadScript, "script must be a JSON array"};
  }
  std::ostringstream out;
  for (const auto& op : script) {
    std::string kind = need_str(op, "op");
    try {
      if (kind == "add_user") {
        std::string name = need_str(op, "name");
        bool chair = op.value("chair", false);
        state.add_user(name, chair);
        out << "[ok] add_user " << name << (chair ? " (chair)" : "") << "\n";
      } else if (kind == "submit_paper") {
        std::string author = need_str(op, "author");
        std::string title = need_str(op, "title");
        std::string id = state.submit_paper(author, title, need_str(op, "body"));
        out << "[ok] submit_paper " << id << " \"" << title << "\" by " << author << "; body "
            << state.papers().at(id).body.label().to_string() << "\n";
      } else if (kind == "assign_reviewer") {
        std::string paper = need_str(op, "paper");
        std::string reviewer = need_str(op, "reviewer");
        std::string by = need_str(op, "by");
        state.assign_reviewer(by, paper, reviewer);
        out << "[ok] assign_reviewer " << paper << " " << reviewer << " by " << by << "; body "
            << state.papers().at(paper).body.label().to_string() << "\n";
      } else if (kind == "declare_conflict") {
        std::string paper = need_str(op, "paper");
        std::string principal = need_str(op, "principal");
        std::string by = need_str(op, "by");
        state.declare_conflict(by, paper, principal);
        out << "[ok] declare_conflict " << paper << " " << principal << " by " << by << "; body "
            << state.papers().at(paper).body.label().to_string() << "\n";
      } else if (kind == "submit_review") {
        std::string paper = need_str(op, "paper");
        std::string reviewer = need_str(op, "reviewer");
        state.submit_review(reviewer, paper, need_str(op, "text"));
        const Review* review = nullptr;
        for (const Review* r : state.reviews_of(paper)) {
          if (r->reviewer == reviewer) review = r;
        }
        out << "[ok] submit_review " << paper << " by " << reviewer << "; content "
            << review->content.label().to_string() << "\n";
      } else if (kind == "read_paper") {
        std::string paper = need_str(op, "paper");
        std::string user = need_str(op, "user");
        ReadResult r = state.read_paper(user, paper);
        if (r.ok) {
          out << "[ok] read_paper " << paper << " as " << user << ": \"" << r.text
              << "\"; session " << r.session_label.to_string() << "\n";
        } else {
          out << "[denied] read_paper " << paper << " as " << user << ": " << r.denial << "\n";
        }
      } else if (kind == "read_review") {
        std::string paper = need_str(op, "paper");
        std::string reviewer = need_str(op, "reviewer");
        std::string user = need_str(op, "user");
        ReadResult r = state.read_review(user, paper, reviewer);
        if (r.ok) {
          out << "[ok] read_review " << paper << "/" << reviewer << " as " << user << ": \""
              << r.text << "\"; session " << r.session_label.to_string() << "\n";
        } else {
          out << "[denied] read_review " << paper << "/" << reviewer << " as " << user << ": "
              << r.denial << "\n";
        }
      } else {
        throw ChairError{ChairErrorKind::BadScript, "unknown operation '" + kind + "'"};
      }
    } catch (const ChairError& e) {
      if (e.kind == ChairErrorKind::BadScript) throw;
      out << "[error] " << kind << ": " << chair_error_name(e.kind) << " (" << e.message << ")\n";
    }
  }
  return out.str();
}

}  // namespace lio::chair
