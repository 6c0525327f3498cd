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

#include "softsched/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "softsched/error.hpp"

namespace softsched {

double distance(const Position& a, const Position& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<Node> generate_nodes(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("generate_nodes: need at least one node");
  std::vector<Node> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    nodes[i].id = i;
    nodes[i].position.x = rng.uniform01();
    nodes[i].position.y = rng.uniform01();
  }
  return nodes;
}

std::vector<Node> generate_nodes(int n, std::uint64_t seed) {
  Rng rng(seed);
  return generate_nodes(n, rng);
}

std::vector<Session> generate_sessions(int n_nodes, int n_sessions, double poisson_mean,
                                       Rng& rng) {
  if (n_nodes < 2) throw InvalidArgument("generate_sessions: need at least two nodes");
  if (n_sessions < 1) throw InvalidArgument("generate_sessions: need at least one session");
  if (!(poisson_mean > 0.0)) {
    throw InvalidArgument("generate_sessions: poisson_mean must be positive");
  }
  const auto n = static_cast<std::size_t>(n_nodes);
  const std::size_t available = n * (n - 1);
  if (static_cast<std::size_t>(n_sessions) > available) {
    throw InvalidArgument("generate_sessions: " + std::to_string(n_sessions) +
                          " sessions requested but only " + std::to_string(available) +
                          " distinct source-sink pairs exist");
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(available);
  for (int s = 0; s < n_nodes; ++s) {
    for (int t = 0; t < n_nodes; ++t) {
      if (s != t) pairs.emplace_back(s, t);
    }
  }
  // Partial Fisher-Yates: the first n_sessions entries are the sample.
  std::vector<Session> sessions;
  sessions.reserve(static_cast<std::size_t>(n_sessions));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_sessions); ++i) {
    const std::size_t j = i + rng.below(available - i);
    std::swap(pairs[i], pairs[j]);
    std::uint64_t packets = 0;
    while (packets == 0) packets = rng.poisson(poisson_mean);
    sessions.push_back({pairs[i].first, pairs[i].second, static_cast<int>(packets)});
  }
  return sessions;
}

double received_power_db(const Node& tx, const Position& rx,
                         const PropagationParams& params) noexcept {
  const double d = std::max(distance(tx.position, rx), params.d_min);
  return tx.tx_power_db - 10.0 * params.alpha * std::log10(d);
}

namespace {

double hop_cost(const Node& a, const Node& b, const PropagationParams& params) {
  return std::pow(std::max(distance(a.position, b.position), params.d_min), params.alpha);
}

void check_nodes(std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != static_cast<int>(i)) {
      throw InvalidArgument("node ids must be dense and ordered: position " +
                            std::to_string(i) + " has id " + std::to_string(nodes[i].id));
    }
  }
}

void check_params(const PropagationParams& params) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    throw InvalidArgument("alpha must be positive and finite");
  }
  if (!(params.d_min > 0.0)) throw InvalidArgument("d_min must be positive");
}

// Dijkstra label. Labels compare by cost, then hop count, then node sequence;
// extending two labels by the same hop keeps their order, so the usual
// settle-the-smallest argument still holds.
struct Label {
  double cost = std::numeric_limits<double>::infinity();
  Path path;

  bool reached() const { return !path.empty(); }
  friend bool operator<(const Label& a, const Label& b) {
    return std::forward_as_tuple(a.cost, a.path.size(), a.path) <
           std::forward_as_tuple(b.cost, b.path.size(), b.path);
  }
};

std::vector<Label> shortest_paths_from(std::span<const Node> nodes, int source,
                                       const PropagationParams& params) {
  const std::size_t n = nodes.size();
  std::vector<Label> best(n);
  std::vector<bool> settled(n, false);
  best[source].cost = 0.0;
  best[source].path = {source};
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (settled[v] || !best[v].reached()) continue;
      if (u == n || best[v] < best[u]) u = v;
    }
    if (u == n) break;
    settled[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (settled[v]) continue;
      Label candidate{best[u].cost + hop_cost(nodes[u], nodes[v], params), best[u].path};
      candidate.path.push_back(static_cast<int>(v));
      if (!best[v].reached() || candidate < best[v]) best[v] = std::move(candidate);
    }
  }
  return best;
}

}  // namespace

double path_cost(std::span<const Node> nodes, const Path& path,
                 const PropagationParams& params) {
  double cost = 0.0;
  for (std::size_t h = 1; h < path.size(); ++h) {
    cost += hop_cost(nodes[path[h - 1]], nodes[path[h]], params);
  }
  return cost;
}

std::vector<Path> route_sessions(std::span<const Node> nodes,
                                 std::span<const Session> sessions,
                                 const PropagationParams& params) {
  if (nodes.size() < 2) throw InvalidArgument("route_sessions: need at least two nodes");
  check_nodes(nodes);
  check_params(params);
  const int n = static_cast<int>(nodes.size());

  std::map<int, std::vector<Label>> trees;
  std::vector<Path> paths;
  paths.reserve(sessions.size());
  for (const Session& s : sessions) {
    if (s.source < 0 || s.source >= n || s.sink < 0 || s.sink >= n) {
      throw InvalidArgument("route_sessions: session endpoint out of range");
    }
    if (s.source == s.sink) {
      throw InvalidArgument("route_sessions: session source equals sink (node " +
                            std::to_string(s.source) + ")");
    }
    auto it = trees.find(s.source);
    if (it == trees.end()) {
      it = trees.emplace(s.source, shortest_paths_from(nodes, s.source, params)).first;
    }
    paths.push_back(it->second[s.sink].path);
  }
  return paths;
}

TrafficLoad accumulate_rates(std::span<const Node> nodes, std::span<const Path> paths,
                             std::span<const Session> sessions) {
  if (paths.size() != sessions.size()) {
    throw InvalidArgument("accumulate_rates: paths and sessions differ in length");
  }
  TrafficLoad load;
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t s = 0; s < sessions.size(); ++s) {
    if (sessions[s].packets <= 0) continue;
    const Path& path = paths[s];
    for (std::size_t h = 1; h < path.size(); ++h) {
      const std::pair<int, int> key{path[h - 1], path[h]};
      auto [it, inserted] = index.try_emplace(key, load.links.size());
      if (inserted) {
        const int id = static_cast<int>(load.links.size());
        load.links.push_back({id, key.first, key.second,
                              distance(nodes[key.first].position, nodes[key.second].position)});
        load.rates.push_back(0);
      }
      load.rates[it->second] += sessions[s].packets;
    }
  }
  return load;
}

}  // namespace softsched
