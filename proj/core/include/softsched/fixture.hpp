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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softsched/conflict.hpp"
#include "softsched/topology.hpp"

namespace softsched {

/// Explicit node placement plus sessions.
///
///   {"nodes": [{"id": 0, "x": 0.1, "y": 0.2, "tx_power_db": 0}, ...],
///    "sessions": [{"source": 0, "sink": 3, "packets": 4}, ...]}
struct TopologyFixture {
  std::vector<Node> nodes;
  std::vector<Session> sessions;
};

/// Conflict graph given directly, optionally with per-link rates.
///
///   {"n_links": 3, "conflicts": [[1, 2]], "rates": [3, 1, 2]}
struct ConflictFixture {
  ConflictGraph graph;
  RateVector rates;  // empty when absent
};

using Fixture = std::variant<TopologyFixture, ConflictFixture>;

TopologyFixture parse_topology_fixture(std::string_view text);
ConflictFixture parse_conflict_fixture(std::string_view text);
/// Dispatches on the presence of "n_links" (conflict) or "nodes" (topology).
Fixture parse_fixture(std::string_view text);
Fixture read_fixture(const std::filesystem::path& path);

std::string dump_topology_fixture(const TopologyFixture& f);
std::string dump_conflict_fixture(const ConflictFixture& f);

}  // namespace softsched
