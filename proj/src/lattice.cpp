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

#include "lio/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace lio {

namespace {

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

std::set<std::string> set_intersect(const std::set<std::string>& a,
                                    const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

bool set_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool SecrecySet::subset_of(const SecrecySet& other) const {
  if (other.is_all()) return true;
  if (is_all()) return false;
  return set_subset(names_, other.names_);
}

SecrecySet SecrecySet::union_with(const SecrecySet& other) const {
  if (is_all() || other.is_all()) return all();
  return of(set_union(names_, other.names_));
}

SecrecySet SecrecySet::intersect_with(const SecrecySet& other) const {
  if (is_all()) return other;
  if (other.is_all()) return *this;
  return of(set_intersect(names_, other.names_));
}

std::string Label::to_string() const {
  if (kind() == LatticeKind::TwoPoint) {
    return two_point() == TwoPointLevel::Low ? "L" : "H";
  }
  const PrincipalLabel& p = principal_label();
  std::ostringstream out;
  out << "<";
  if (p.secrecy.is_all()) {
    out << "*";
  } else {
    out << "{";
    bool first = true;
    for (const std::string& name : p.secrecy.names()) {
      if (!first) out << ",";
      out << name;
      first = false;
    }
    out << "}";
  }
  out << "|{";
  bool first = true;
  for (const std::string& name : p.integrity) {
    if (!first) out << ",";
    out << name;
    first = false;
  }
  out << "}>";
  return out.str();
}

bool can_flow_to(const Label& from, const Label& to) {
  if (from.kind() != to.kind()) throw LatticeMismatchError();
  if (from.kind() == LatticeKind::TwoPoint) {
    return static_cast<int>(from.two_point()) <= static_cast<int>(to.two_point());
  }
  const PrincipalLabel& a = from.principal_label();
  const PrincipalLabel& b = to.principal_label();
  return a.secrecy.subset_of(b.secrecy) && set_subset(b.integrity, a.integrity);
}

Label join(const Label& a, const Label& b) {
  if (a.kind() != b.kind()) throw LatticeMismatchError();
  if (a.kind() == LatticeKind::TwoPoint) {
    return static_cast<int>(a.two_point()) >= static_cast<int>(b.two_point()) ? a : b;
  }
  const PrincipalLabel& pa = a.principal_label();
  const PrincipalLabel& pb = b.principal_label();
  return Label::principal(pa.secrecy.union_with(pb.secrecy),
                          set_intersect(pa.integrity, pb.integrity));
}

Label meet(const Label& a, const Label& b) {
  if (a.kind() != b.kind()) throw LatticeMismatchError();
  if (a.kind() == LatticeKind::TwoPoint) {
    return static_cast<int>(a.two_point()) <= static_cast<int>(b.two_point()) ? a : b;
  }
  const PrincipalLabel& pa = a.principal_label();
  const PrincipalLabel& pb = b.principal_label();
  return Label::principal(pa.secrecy.intersect_with(pb.secrecy),
                          set_union(pa.integrity, pb.integrity));
}

Label default_initial_label(LatticeKind kind) {
  return kind == LatticeKind::TwoPoint ? Label::low() : Label::principal(SecrecySet::of({}), {});
}

Label default_clearance(LatticeKind kind) {
  return kind == LatticeKind::TwoPoint ? Label::high() : Label::principal(SecrecySet::all(), {});
}

namespace {

// Cursor over the angle-bracket label syntax. Skips whitespace everywhere
// inside the form.
class LabelCursor {
 public:
  explicit LabelCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))

      throw LabelParseError(std::string("expected '") + c + "' in label literal");
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) throw LabelParseError("expected principal name in label literal");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::set<std::string> parse_name_set(LabelCursor& cur) {
  std::set<std::string> names;
  cur.expect('{');
  if (!cur.peek_is('}')) {
    names.insert(cur.ident());
    while (cur.eat(',')) names.insert(cur.ident());
  }
  cur.expect('}');
  return names;
}

}  // namespace

Label parse_label(std::string_view text) {
  LabelCursor cur(text);
  if (cur.eat('<')) {
    SecrecySet secrecy;
    if (cur.eat('*')) {
      secrecy = SecrecySet::all();
    } else {
      secrecy = SecrecySet::of(parse_name_set(cur));
    }
    cur.expect('|');
    std::set<std::string> integrity = parse_name_set(cur);
    cur.expect('>');
    if (!cur.at_end()) throw LabelParseError("trailing characters after label literal");
    return Label::principal(std::move(secrecy), std::move(integrity));
  }
  if (cur.eat('L') && cur.at_end()) return Label::low();
  LabelCursor again(text);
  if (again.eat('H') && again.at_end()) return Label::high();
  throw LabelParseError("unrecognized label literal: '" + std::string(text) + "'");
}

}  // namespace lio
