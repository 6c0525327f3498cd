// Copyright 2026 The softsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "softsched/conflict.hpp"

namespace softsched {

inline constexpr std::size_t kDefaultComponentCap = 100000;

/// Set of links that may be active in the same slot.
struct Component {
  std::vector<int> members;  // ascending link indices

  std::size_t generation() const noexcept { return members.size(); }
  bool contains(int link) const;

  friend bool operator==(const Component&, const Component&) = default;
  /// Canonical order: generation first, then lexicographic members.
  friend bool operator<(const Component& a, const Component& b);
};

/// Every independent set of `g` with 1 <= size <= max_generation (unbounded
/// when empty), in canonical order. Throws ResourceLimit past `cap`.
std::vector<Component> enumerate_components(
    const ConflictGraph& g, std::optional<std::size_t> max_generation = std::nullopt,
    std::size_t cap = kDefaultComponentCap);

/// Drops components that are a strict subset of another input component.
/// Relative order of the survivors is preserved.
std::vector<Component> prune_dominated(const std::vector<Component>& components);

/// Maximal independent sets of `g` in canonical order.
///
/// Bron-Kerbosch with Tomita pivoting on the complement graph, so a maximal
/// clique there is a maximal conflict-free link set here.
std::vector<Component> enumerate_maximal(const ConflictGraph& g,
                                         std::size_t cap = kDefaultComponentCap);

}  // namespace softsched
