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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "softsched/topology.hpp"

namespace softsched {

/// Margin value that disables the interference rule, leaving only the
/// shared-node rule.
inline constexpr double kNoInterference = -std::numeric_limits<double>::infinity();

struct ConflictParams {
  double beta_db = 0.0;
  PropagationParams propagation;
};

/// Symmetric link conflict relation. A link always conflicts with itself.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::size_t n_links);
  /// Graph with the given conflicting index pairs (order within a pair and
  /// duplicates are irrelevant).
  ConflictGraph(std::size_t n_links,
                std::span<const std::pair<std::size_t, std::size_t>> conflicts);

  std::size_t size() const noexcept { return n_; }

  bool conflicts(std::size_t a, std::size_t b) const {
    return adjacency_[a * n_ + b] != 0;
  }
  void add_conflict(std::size_t a, std::size_t b);

  /// Off-diagonal conflicting pairs (a < b), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t degree(std::size_t a) const;
  std::size_t max_degree() const;

  /// True when no two members conflict.
  bool independent(std::span<const int> members) const;

  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> adjacency_;
};

/// Links sharing an endpoint.
bool physically_adjacent(const Link& a, const Link& b) noexcept;

/// Pairwise interference test between node-disjoint links a = (i->j) and
/// b = (m->k): conflict when S_mk <= S_ik + beta or S_ij <= S_mj + beta.
bool interference_adjacent(const Link& a, const Link& b,
                           std::span<const Node> nodes,
                           const ConflictParams& params);

ConflictGraph build_conflict_graph(std::span<const Link> links,
                                   std::span<const Node> nodes,
                                   const ConflictParams& params);

}  // namespace softsched
