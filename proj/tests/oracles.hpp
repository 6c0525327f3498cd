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

// Brute-force reference routines. Nothing here calls into the routines under
// test except for plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "softsched/conflict.hpp"
#include "softsched/game.hpp"
#include "softsched/topology.hpp"

namespace softsched::oracle {

/// Maximal independent sets by checking every subset.
inline std::vector<std::vector<int>> maximal_sets(const ConflictGraph& g) {
  const std::size_t n = g.size();
  auto independent = [&](std::uint32_t mask) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if ((mask >> b & 1U) && g.conflicts(a, b)) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (!independent(mask)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!(mask >> v & 1U) && independent(mask | (1U << v))) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) members.push_back(static_cast<int>(v));
    }
    out.push_back(members);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Every independent set (all sizes), unordered.
inline std::vector<std::vector<int>> independent_sets(const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) members.push_back(static_cast<int>(v));
    }
    bool ok = true;
    for (std::size_t p = 0; p < members.size() && ok; ++p) {
      for (std::size_t q = p + 1; q < members.size() && ok; ++q) {
        ok = !g.conflicts(members[p], members[q]);
      }
    }
    if (ok) out.push_back(members);
  }
  return out;
}

/// Cheapest simple path cost sum(max(d, d_min)^alpha) by depth-first search.
inline double min_path_cost(const std::vector<Node>& nodes, int source, int sink, double alpha,
                            double d_min = 1e-6) {
  const std::size_t n = nodes.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> used(n, false);
  std::function<void(int, double)> dfs = [&](int at, double cost) {
    if (at == sink) {
      best = std::min(best, cost);
      return;
    }
    used[at] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      const double dx = nodes[at].position.x - nodes[v].position.x;
      const double dy = nodes[at].position.y - nodes[v].position.y;
      const double d = std::max(std::sqrt(dx * dx + dy * dy), d_min);
      dfs(static_cast<int>(v), cost + std::pow(d, alpha));
    }
    used[at] = false;
  };
  dfs(source, 0.0);
  return best;
}

/// max over a simplex grid (step 1/steps) of min_i (Hy)_i.
inline double grid_game_value(const PayoffMatrix& h, int steps) {
  const std::size_t cols = h.cols();
  std::vector<int> parts(cols, 0);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j + 1 == cols) {
      parts[j] = left;
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < h.rows(); ++i) {
        double v = 0.0;
        for (std::size_t c = 0; c < cols; ++c) v += h(i, c) * parts[c] / double(steps);
        worst = std::min(worst, v);
      }
      best = std::max(best, worst);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      parts[j] = p;
      rec(j + 1, left - p);
    }
  };
  rec(0, steps);
  return best;
}

/// Erdos-Renyi conflict graph.
inline ConflictGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  ConflictGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge(rng)) g.add_conflict(a, b);
    }
  }
  return g;
}

inline RateVector random_rates(std::size_t n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  RateVector r(n);
  for (auto& v : r) v = d(rng);
  return r;
}

}  // namespace softsched::oracle
