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

#ifndef LIO_LATTICE_HPP_
#define LIO_LATTICE_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lio {

/**
 * Security lattices.
 *
 * Two concrete lattices are provided behind one Label value type:
 *
 *  - the two-point lattice L ⊑ H, and
 *  - principal labels (secrecy set, integrity set), where
 *      (s1,i1) ⊑ (s2,i2)  iff  s1 ⊆ s2 and i2 ⊆ i1.
 *
 * Secrecy grows covariantly (more principals = more secret), integrity
 * contravariantly (fewer endorsers = weaker). The secrecy component has a
 * top sentinel (all principals) so a clearance can stay unbounded while
 * principals are registered dynamically; integrity has no sentinel, the
 * empty set is its top.
 *
 * Labels are immutable values and freely shareable across threads.
 */

enum class LatticeKind { TwoPoint, Principal };

enum class TwoPointLevel : unsigned char { Low = 0, High = 1 };

// Thrown when two labels from different lattices meet in one operation.
class LatticeMismatchError : public std::logic_error {
 public:
  LatticeMismatchError() : std::logic_error("labels belong to different lattices") {}
};

class LabelParseError : public std::runtime_error {
 public:
  explicit LabelParseError(const std::string& what) : std::runtime_error(what) {}
};

// Secrecy component of a principal label: a finite set of principal names
// or the "all principals" top element.
class SecrecySet {
 public:
  SecrecySet() = default;

  static SecrecySet all() {
    SecrecySet s;
    s.all_ = true;
    return s;
  }
  static SecrecySet of(std::set<std::string> names) {
    SecrecySet s;
    s.names_ = std::move(names);
    return s;
  }

  bool is_all() const { return all_; }
  const std::set<std::string>& names() const { return names_; }

  bool subset_of(const SecrecySet& other) const;
  SecrecySet union_with(const SecrecySet& other) const;
  SecrecySet intersect_with(const SecrecySet& other) const;

  bool operator==(const SecrecySet& other) const = default;

 private:
  bool all_ = false;
  std::set<std::string> names_;  // empty when all_
};

struct PrincipalLabel {
  SecrecySet secrecy;
  std::set<std::string> integrity;

  bool operator==(const PrincipalLabel& other) const = default;
};

class Label {
 public:
  // Defaults to two-point Low so labels can live in containers.
  Label() : repr_(TwoPointLevel::Low) {}

  static Label low() { return Label(TwoPointLevel::Low); }
  static Label high() { return Label(TwoPointLevel::High); }
  static Label principal(SecrecySet secrecy, std::set<std::string> integrity) {
    return Label(PrincipalLabel{std::move(secrecy), std::move(integrity)});
  }
  static Label secrecy_of(std::set<std::string> names) {
    return principal(SecrecySet::of(std::move(names)), {});
  }

  LatticeKind kind() const {
    return std::holds_alternative<TwoPointLevel>(repr_) ? LatticeKind::TwoPoint
                                                        : LatticeKind::Principal;
  }

  TwoPointLevel two_point() const { return std::get<TwoPointLevel>(repr_); }
  const PrincipalLabel& principal_label() const { return std::get<PrincipalLabel>(repr_); }

  std::string to_string() const;

  bool operator==(const Label& other) const = default;

 private:
  explicit Label(TwoPointLevel l) : repr_(l) {}
  explicit Label(PrincipalLabel l) : repr_(std::move(l)) {}

  std::variant<TwoPointLevel, PrincipalLabel> repr_;
};

// The flow relation ⊑. Throws LatticeMismatchError on mixed lattices.
bool can_flow_to(const Label& from, const Label& to);

// Least upper bound ⊔ and greatest lower bound ⊓.
Label join(const Label& a, const Label& b);
Label meet(const Label& a, const Label& b);

// A fresh computation starts public and maximally permitted.
Label default_initial_label(LatticeKind kind);
Label default_clearance(LatticeKind kind);

// Parses the textual label syntax: `L`, `H`, `<{A,B}|{C}>`, `<*|{}>`.
// Whitespace inside the angle form is ignored. Throws LabelParseError.
Label parse_label(std::string_view text);

}  // namespace lio

#endif  // LIO_LATTICE_HPP_
