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

#ifndef LIO_GEN_HPP_
#define LIO_GEN_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lio/ast.hpp"

namespace lio {

// Per-construct weights steering random program shapes. Zero disables a
// construct entirely.
struct GenWeights {
  // leaves
  int int_lit = 4;
  int bool_lit = 3;
  int str_lit = 1;
  int unit_lit = 1;
  int var_ref = 4;
  int secret = 3;
  int get_label = 1;
  int get_clearance = 1;
  // inner nodes
  int let_ = 4;
  int lambda = 2;
  int apply = 3;
  int if_ = 4;
  int binop = 4;
  int seq = 3;
  int label_e = 3;
  int unlabel = 4;
  int label_of = 1;
  int to_labeled = 4;
  int lower_clearance = 1;
  int new_ref = 2;
  int read_ref = 2;
  int write_ref = 2;
  int throw_ = 1;
  int try_catch = 2;

  static GenWeights leaves_only() {
    GenWeights w;
    w.let_ = w.lambda = w.apply = w.if_ = w.binop = w.seq = 0;
    w.label_e = w.unlabel = w.label_of = w.to_labeled = w.lower_clearance = 0;
    w.new_ref = w.read_ref = w.write_ref = w.throw_ = w.try_catch = 0;
    return w;
  }

  static GenWeights pure_only() {
    GenWeights w;
    w.secret = w.get_label = w.get_clearance = 0;
    w.label_e = w.unlabel = w.label_of = w.to_labeled = w.lower_clearance = 0;
    w.new_ref = w.read_ref = w.write_ref = w.throw_ = w.try_catch = 0;
    return w;
  }
};

struct GenConfig {
  std::uint64_t seed = 0;
  int max_depth = 8;
  LatticeKind lattice = LatticeKind::TwoPoint;
  // secret hole names with their labels; empty disables secret leaves
  std::vector<std::pair<std::string, Label>> secrets = {{"s", Label::high()}};
  GenWeights weights;
};

// Deterministic, well-scoped, type-blind program generation: identical
// (seed, config) pairs produce identical ASTs; variables are always bound
// before use; dynamic type errors are acceptable run outcomes.
ExprPtr generate_program(const GenConfig& config);

// Does the AST contain any construct that touches the monitor?
bool mentions_ifc(const Expr& e);

// Restricted generator for the label-accounting check: integer-typed,
// total straight-line programs (let/seq/arithmetic/label/unlabel/secret)
// whose unlabel targets carry syntactically known labels. Such programs
// always run to completion, so the final label can be predicted by a fold
// over the program text alone.
ExprPtr generate_straight_line(std::uint64_t seed, LatticeKind lattice,
                               const std::string& secret_name, const Label& secret_label,
                               int depth);

}  // namespace lio

#endif  // LIO_GEN_HPP_
