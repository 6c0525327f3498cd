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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "softsched/rng.hpp"

namespace softsched {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(const Position& a, const Position& b) noexcept;

/// Network node placed in the unit square.
struct Node {
  int id = 0;
  Position position;
  double tx_power_db = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Directed wireless link tx -> rx.
struct Link {
  int id = 0;
  int tx = 0;
  int rx = 0;
  double distance = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

/// Unicast session carrying `packets` packets from source to sink.
struct Session {
  int source = 0;
  int sink = 0;
  int packets = 0;

  friend bool operator==(const Session&, const Session&) = default;
};

struct PropagationParams {
  double alpha = 4.0;
  double d_min = 1e-6;
};

/// Required activations per scheduled link, indexed like the link list.
using RateVector = std::vector<int>;

/// Node path of a routed session, source first.
using Path = std::vector<int>;

/// Links used by routed traffic together with their activation demand.
struct TrafficLoad {
  std::vector<Link> links;
  RateVector rates;
};

/// `n` nodes uniformly placed in [0,1]^2, drawn from `rng`.
std::vector<Node> generate_nodes(int n, Rng& rng);
/// Same, from a fresh stream seeded with `seed`.
std::vector<Node> generate_nodes(int n, std::uint64_t seed);

/// Distinct ordered (source, sink) pairs sampled without replacement, each
/// carrying a Poisson(poisson_mean) packet count redrawn until positive.
std::vector<Session> generate_sessions(int n_nodes, int n_sessions,
                                       double poisson_mean, Rng& rng);

/// Received power in dB at `rx` from `tx`:
/// tx_power_db - 10 * alpha * log10(max(d, d_min)).
double received_power_db(const Node& tx, const Position& rx,
                         const PropagationParams& params) noexcept;

/// Minimum-power route for each session over the full directed mesh.
///
/// The hop cost is max(d, d_min)^alpha. Among equal-cost routes the one with
/// fewer hops wins, then the lexicographically smallest node sequence.
std::vector<Path> route_sessions(std::span<const Node> nodes,
                                 std::span<const Session> sessions,
                                 const PropagationParams& params);

/// Total power cost (sum of hop costs) of a node path.
double path_cost(std::span<const Node> nodes, const Path& path,
                 const PropagationParams& params);

/// Folds routed sessions into per-link demand. Links are numbered in order of
/// first use (session order, then hop order); zero-packet sessions add
/// nothing.
TrafficLoad accumulate_rates(std::span<const Node> nodes,
                             std::span<const Path> paths,
                             std::span<const Session> sessions);

}  // namespace softsched
