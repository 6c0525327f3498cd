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

#include "softsched/conflict.hpp"

#include <algorithm>
#include <string>

#include "softsched/error.hpp"

namespace softsched {

ConflictGraph::ConflictGraph(std::size_t n_links)
    : n_(n_links), adjacency_(n_links * n_links, 0) {
  for (std::size_t i = 0; i < n_; ++i) adjacency_[i * n_ + i] = 1;
}

ConflictGraph::ConflictGraph(std::size_t n_links,
                             std::span<const std::pair<std::size_t, std::size_t>> conflicts)
    : ConflictGraph(n_links) {
  for (const auto& [a, b] : conflicts) add_conflict(a, b);
}

void ConflictGraph::add_conflict(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) {
    throw InvalidArgument("conflict pair (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") out of range for " + std::to_string(n_) + " links");
  }
  adjacency_[a * n_ + b] = 1;
  adjacency_[b * n_ + a] = 1;
}

std::vector<std::pair<std::size_t, std::size_t>> ConflictGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (conflicts(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t ConflictGraph::degree(std::size_t a) const {
  std::size_t d = 0;
  for (std::size_t b = 0; b < n_; ++b) d += (b != a && conflicts(a, b)) ? 1 : 0;
  return d;
}

std::size_t ConflictGraph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t a = 0; a < n_; ++a) d = std::max(d, degree(a));
  return d;
}

bool ConflictGraph::independent(std::span<const int> members) const {
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t q = p + 1; q < members.size(); ++q) {
      if (conflicts(static_cast<std::size_t>(members[p]), static_cast<std::size_t>(members[q]))) {
        return false;
      }
    }
  }
  return true;
}

bool physically_adjacent(const Link& a, const Link& b) noexcept {
  return a.tx == b.tx || a.tx == b.rx || a.rx == b.tx || a.rx == b.rx;
}

bool interference_adjacent(const Link& a, const Link& b, std::span<const Node> nodes,
                           const ConflictParams& params) {
  const Node& i = nodes[a.tx];
  const Node& j = nodes[a.rx];
  const Node& m = nodes[b.tx];
  const Node& k = nodes[b.rx];
  const auto& prop = params.propagation;
  // b's receiver k hears i too loudly, or a's receiver j hears m too loudly.
  const bool at_k = received_power_db(m, k.position, prop) <=
                    received_power_db(i, k.position, prop) + params.beta_db;
  const bool at_j = received_power_db(i, j.position, prop) <=
                    received_power_db(m, j.position, prop) + params.beta_db;
  return at_k || at_j;
}

ConflictGraph build_conflict_graph(std::span<const Link> links, std::span<const Node> nodes,
                                   const ConflictParams& params) {
  if (links.empty()) throw InvalidArgument("build_conflict_graph: empty link list");
  for (const Link& l : links) {
    if (l.tx < 0 || l.rx < 0 || static_cast<std::size_t>(l.tx) >= nodes.size() ||
        static_cast<std::size_t>(l.rx) >= nodes.size()) {
      throw InvalidArgument("build_conflict_graph: link " + std::to_string(l.id) +
                            " references a missing node");
    }
  }
  ConflictGraph g(links.size());
  for (std::size_t a = 0; a < links.size(); ++a) {
    for (std::size_t b = a + 1; b < links.size(); ++b) {
      if (physically_adjacent(links[a], links[b]) ||
          interference_adjacent(links[a], links[b], nodes, params)) {
        g.add_conflict(a, b);
      }
    }
  }
  return g;
}

}  // namespace softsched
