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

#ifndef LIO_REFS_HPP_
#define LIO_REFS_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lio/value.hpp"

namespace lio {

// Cell storage behind labeled references. The store never inspects the
// values it holds; all label checks live in Context. Each store carries a
// process-unique id so handles cannot be replayed against another context.
class RefStore {
 public:
  RefStore();

  std::uint64_t store_id() const { return store_id_; }

  std::uint64_t alloc(ValuePtr initial);
  const ValuePtr& get(std::uint64_t id) const;
  void set(std::uint64_t id, ValuePtr v);
  bool owns(const RefHandle& h) const { return h.store_id == store_id_; }
  std::size_t size() const { return cells_.size(); }

  // Stable view of (id, cell identity) pairs, for atomicity and isolation
  // checks.
  std::vector<std::pair<std::uint64_t, const Value*>> snapshot() const;

 private:
  std::uint64_t store_id_;
  std::uint64_t next_id_ = 0;
  std::map<std::uint64_t, ValuePtr> cells_;
};

}  // namespace lio

#endif  // LIO_REFS_HPP_
