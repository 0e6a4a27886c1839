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

#include "lio/refs.hpp"

#include <atomic>
#include <stdexcept>

namespace lio {

namespace {
std::atomic<std::uint64_t> next_store_id{1};
}

RefStore::RefStore() : store_id_(next_store_id.fetch_add(1)) {}

std::uint64_t RefStore::alloc(ValuePtr initial) {
  std::uint64_t id = next_id_++;
  cells_.emplace(id, std::move(initial));
  return id;
}

const ValuePtr& RefStore::get(std::uint64_t id) const {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw std::logic_error("reference id not in store");
  return it->second;
}

void RefStore::set(std::uint64_t id, ValuePtr v) {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw std::logic_error("reference id not in store");
  it->second = std::move(v);
}

std::vector<std::pair<std::uint64_t, const Value*>> RefStore::snapshot() const {
  std::vector<std::pair<std::uint64_t, const Value*>> out;
  out.reserve(cells_.size());
  for (const auto& [id, cell] : cells_) out.emplace_back(id, cell.get());
  return out;
}

}  // namespace lio
