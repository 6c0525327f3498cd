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

#include <span>
#include <vector>

#include "softsched/conflict.hpp"
#include "softsched/topology.hpp"

namespace softsched {

/// Hard coloring: each link belongs to exactly one class.
struct Coloring {
  std::vector<std::vector<int>> classes;  // members ascending within a class
};

/// Sequential greedy coloring. Links are visited in `order`; each joins the
/// lowest-index class it is compatible with, or opens a new one.
Coloring greedy_color(const ConflictGraph& g, std::span<const int> order);
/// Greedy coloring in link-index order.
Coloring greedy_color(const ConflictGraph& g);

/// Slots needed when each class stays on air until its busiest link is done.
long long coloring_slots(const Coloring& c, const RateVector& rates);

/// One link activation per slot.
long long no_schedule_slots(const RateVector& rates);

}  // namespace softsched
