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

#include "softsched/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "softsched/error.hpp"

namespace softsched {

Coloring greedy_color(const ConflictGraph& g, std::span<const int> order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw InvalidArgument("greedy_color: order is not a permutation");
  std::vector<bool> seen(n, false);
  for (int l : order) {
    if (l < 0 || static_cast<std::size_t>(l) >= n || seen[l]) {
      throw InvalidArgument("greedy_color: order is not a permutation");
    }
    seen[l] = true;
  }

  Coloring c;
  for (int l : order) {
    auto fits = [&](const std::vector<int>& cls) {
      return std::none_of(cls.begin(), cls.end(), [&](int m) {
        return g.conflicts(static_cast<std::size_t>(l), static_cast<std::size_t>(m));
      });
    };
    auto it = std::find_if(c.classes.begin(), c.classes.end(), fits);
    if (it == c.classes.end()) {
      c.classes.push_back({l});
    } else {
      it->insert(std::upper_bound(it->begin(), it->end(), l), l);
    }
  }
  return c;
}

Coloring greedy_color(const ConflictGraph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  return greedy_color(g, order);
}

long long coloring_slots(const Coloring& c, const RateVector& rates) {
  long long total = 0;
  for (const auto& cls : c.classes) {
    long long busiest = 0;
    for (int l : cls) {
      if (l < 0 || static_cast<std::size_t>(l) >= rates.size()) {
        throw InvalidArgument("coloring_slots: link without a rate");
      }
      busiest = std::max<long long>(busiest, rates[l]);
    }
    total += busiest;
  }
  return total;
}

long long no_schedule_slots(const RateVector& rates) {
  return std::accumulate(rates.begin(), rates.end(), 0LL);
}

}  // namespace softsched
