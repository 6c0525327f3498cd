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

#include "softsched/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "softsched/error.hpp"

namespace softsched {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("fixture is not valid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidArgument(std::string(where) + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string(where) + ": field '" + key + "' has the wrong type");
  }
}

TopologyFixture topology_from_json(const json& doc) {
  TopologyFixture f;
  const json& nodes = doc.at("nodes");
  if (!nodes.is_array() || nodes.empty()) {
    throw InvalidArgument("topology fixture: 'nodes' must be a nonempty array");
  }
  for (const json& n : nodes) {
    Node node;
    node.id = field<int>(n, "id", "topology fixture node");
    node.position.x = field<double>(n, "x", "topology fixture node");
    node.position.y = field<double>(n, "y", "topology fixture node");
    node.tx_power_db = n.contains("tx_power_db") ? field<double>(n, "tx_power_db", "node") : 0.0;
    for (double c : {node.position.x, node.position.y}) {
      if (!(c >= 0.0 && c <= 1.0)) {
        throw InvalidArgument("topology fixture: node " + std::to_string(node.id) +
                              " lies outside the unit square");
      }
    }
    if (!std::isfinite(node.tx_power_db)) {
      throw InvalidArgument("topology fixture: node " + std::to_string(node.id) +
                            " has a non-finite tx_power_db");
    }
    f.nodes.push_back(node);
  }
  std::sort(f.nodes.begin(), f.nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    if (f.nodes[i].id != static_cast<int>(i)) {
      throw InvalidArgument("topology fixture: node ids must be exactly 0.." +
                            std::to_string(f.nodes.size() - 1));
    }
  }

  const int n = static_cast<int>(f.nodes.size());
  if (doc.contains("sessions")) {
    for (const json& s : doc.at("sessions")) {
      Session session;
      session.source = field<int>(s, "source", "topology fixture session");
      session.sink = field<int>(s, "sink", "topology fixture session");
      session.packets = field<int>(s, "packets", "topology fixture session");
      if (session.source < 0 || session.source >= n || session.sink < 0 || session.sink >= n) {
        throw InvalidArgument("topology fixture: session endpoint out of range");
      }
      if (session.source == session.sink) {
        throw InvalidArgument("topology fixture: session source equals sink");
      }
      if (session.packets < 0) {
        throw InvalidArgument("topology fixture: session packets must be nonnegative");
      }
      f.sessions.push_back(session);
    }
  }
  return f;
}

ConflictFixture conflict_from_json(const json& doc) {
  const auto n = field<long long>(doc, "n_links", "conflict fixture");
  if (n < 1) throw InvalidArgument("conflict fixture: n_links must be positive");
  ConflictFixture f;
  f.graph = ConflictGraph(static_cast<std::size_t>(n));
  if (doc.contains("conflicts")) {
    for (const json& pair : doc.at("conflicts")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw InvalidArgument("conflict fixture: each conflict must be a pair of link indices");
      }
      const auto a = pair[0].get<long long>();
      const auto b = pair[1].get<long long>();
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw InvalidArgument("conflict fixture: conflict index out of range");
      }
      f.graph.add_conflict(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
  }
  if (doc.contains("rates")) {
    f.rates = field<RateVector>(doc, "rates", "conflict fixture");
    if (f.rates.size() != static_cast<std::size_t>(n)) {
      throw InvalidArgument("conflict fixture: 'rates' must have n_links entries");
    }
    for (int r : f.rates) {
      if (r < 1) throw InvalidArgument("conflict fixture: rates must be >= 1");
    }
  }
  return f;
}

}  // namespace

TopologyFixture parse_topology_fixture(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("nodes")) {
    throw InvalidArgument("topology fixture: missing field 'nodes'");
  }
  return topology_from_json(doc);
}

ConflictFixture parse_conflict_fixture(std::string_view text) {
  return conflict_from_json(parse_json(text));
}

Fixture parse_fixture(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidArgument("fixture must be a JSON object");
  if (doc.contains("n_links")) return conflict_from_json(doc);
  if (doc.contains("nodes")) return topology_from_json(doc);
  throw InvalidArgument("fixture has neither 'nodes' nor 'n_links'");
}

Fixture read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open fixture", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_fixture(buf.str());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

std::string dump_topology_fixture(const TopologyFixture& f) {
  json doc;
  doc["nodes"] = json::array();
  for (const Node& n : f.nodes) {
    doc["nodes"].push_back(
        {{"id", n.id}, {"x", n.position.x}, {"y", n.position.y}, {"tx_power_db", n.tx_power_db}});
  }
  doc["sessions"] = json::array();
  for (const Session& s : f.sessions) {
    doc["sessions"].push_back({{"source", s.source}, {"sink", s.sink}, {"packets", s.packets}});
  }
  return doc.dump(2) + "\n";
}

std::string dump_conflict_fixture(const ConflictFixture& f) {
  json doc;
  doc["n_links"] = f.graph.size();
  doc["conflicts"] = json::array();
  for (const auto& [a, b] : f.graph.edges()) doc["conflicts"].push_back({a, b});
  if (!f.rates.empty()) doc["rates"] = f.rates;
  return doc.dump(2) + "\n";
}

}  // namespace softsched
