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

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "softsched/error.hpp"
#include "softsched/harness.hpp"

namespace softsched {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (n_nodes < 2) throw InvalidArgument("n_nodes must be at least 2");
  if (n_sessions < 1) throw InvalidArgument("n_sessions must be at least 1");
  const long long pairs = static_cast<long long>(n_nodes) * (n_nodes - 1);
  if (n_sessions > pairs) {
    throw InvalidArgument("n_sessions = " + std::to_string(n_sessions) + " exceeds the " +
                          std::to_string(pairs) + " distinct source-sink pairs of " +
                          std::to_string(n_nodes) + " nodes");
  }
  if (runs < 1) throw InvalidArgument("runs must be at least 1");
  if (!(beta.step_db > 0.0) || !std::isfinite(beta.step_db)) {
    throw InvalidArgument("beta step must be positive");
  }
  if (!std::isfinite(beta.min_db) || !std::isfinite(beta.max_db) || beta.max_db < beta.min_db) {
    throw InvalidArgument("beta range must be finite with min <= max");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive");
  if (!(poisson_mean > 0.0) || !std::isfinite(poisson_mean)) {
    throw InvalidArgument("poisson_mean must be positive");
  }
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (max_iterations == 0) throw InvalidArgument("max_iterations must be positive");
  if (modes.empty()) throw InvalidArgument("at least one mode is required");
  if (component_cap == 0) throw InvalidArgument("component_cap must be positive");
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");

  ExperimentConfig cfg;
  try {
    cfg.n_nodes = doc.value("n_nodes", cfg.n_nodes);
    cfg.n_sessions = doc.value("n_sessions", cfg.n_sessions);
    cfg.beta.min_db = doc.value("beta_min", cfg.beta.min_db);
    cfg.beta.max_db = doc.value("beta_max", cfg.beta.max_db);
    cfg.beta.step_db = doc.value("beta_step", cfg.beta.step_db);
    cfg.alpha = doc.value("alpha", cfg.alpha);
    cfg.poisson_mean = doc.value("poisson_mean", cfg.poisson_mean);
    cfg.runs = doc.value("runs", cfg.runs);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.delta = doc.value("delta", cfg.delta);
    cfg.max_iterations = doc.value("max_iterations", cfg.max_iterations);
    cfg.component_cap = doc.value("component_cap", cfg.component_cap);
    cfg.threads = doc.value("threads", cfg.threads);
    cfg.coloring_incumbent = doc.value("coloring_incumbent", cfg.coloring_incumbent);
    if (doc.contains("solver")) cfg.solver = parse_solver(doc.at("solver").get<std::string>());
    if (doc.contains("modes")) {
      const json& m = doc.at("modes");
      if (m.is_string()) {
        cfg.modes = parse_modes(m.get<std::string>());
      } else {
        cfg.modes.clear();
        for (const json& e : m) cfg.modes.push_back(parse_mode(e.get<std::string>()));
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config field has the wrong type: ") + e.what());
  }
  return cfg;
}

ExperimentConfig read_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

}  // namespace softsched
