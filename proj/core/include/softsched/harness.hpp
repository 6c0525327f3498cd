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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softsched/coloring.hpp"
#include "softsched/components.hpp"
#include "softsched/conflict.hpp"
#include "softsched/fixture.hpp"
#include "softsched/game.hpp"
#include "softsched/topology.hpp"

namespace softsched {

enum class Mode { soft, coloring, none };
enum class SolverKind { fp, exact };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(SolverKind s) noexcept;
Mode parse_mode(std::string_view s);
SolverKind parse_solver(std::string_view s);
/// Comma-separated list, e.g. "soft,coloring,none".
std::vector<Mode> parse_modes(std::string_view s);

struct BetaSweep {
  double min_db = 0.0;
  double max_db = 30.0;
  double step_db = 5.0;

  std::vector<double> values() const;
};

struct ExperimentConfig {
  int n_nodes = 10;
  int n_sessions = 10;
  BetaSweep beta;
  double alpha = 4.0;
  double poisson_mean = 5.0;
  int runs = 1000;
  std::uint64_t seed = 1;
  SolverKind solver = SolverKind::fp;
  double delta = 1e-3;
  std::size_t max_iterations = 1000000;
  std::vector<Mode> modes{Mode::soft, Mode::coloring, Mode::none};
  std::size_t component_cap = kDefaultComponentCap;
  /// Let the soft scheduler fall back to the greedy coloring (itself a valid
  /// soft schedule) when the game-derived plan comes out longer.
  bool coloring_incumbent = true;
  /// Worker threads for replications; 0 picks hardware concurrency.
  unsigned threads = 0;

  /// Throws InvalidArgument on the first broken invariant.
  void validate() const;
};

/// Reads a JSON object whose keys mirror ExperimentConfig fields
/// (beta sweep as "beta_min", "beta_max", "beta_step"; modes as a list or a
/// comma-separated string). Missing keys keep their defaults.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig read_experiment_config(const std::filesystem::path& path);

struct ResultRecord {
  int n_nodes = 0;
  int n_sessions = 0;
  int run_id = 0;
  Mode mode = Mode::none;
  double beta_db = 0.0;  // NaN when the conflict graph was supplied directly
  long long total_packets = 0;
  long long total_link_activations = 0;
  long long slots = 0;
  double avg_slots_per_packet = 0.0;
  // Soft mode only.
  double game_value_lower = 0.0;
  double game_value_upper = 0.0;
  std::size_t fp_iterations = 0;
  bool converged = true;
};

/// A generated or fixture-supplied network with its routed traffic.
struct Instance {
  std::vector<Node> nodes;
  std::vector<Session> sessions;
  std::vector<Path> paths;
  TrafficLoad load;

  long long total_packets() const;
};

/// Topology, sessions and routes for replication `run_id`.
Instance make_instance(const ExperimentConfig& cfg, int run_id);
/// Routes a fixed topology.
Instance make_instance(const TopologyFixture& fixture, const PropagationParams& params);

/// Game solution and integer schedule for one conflict graph.
struct SoftOutcome {
  std::vector<Component> components;
  GameSolution solution;
  /// Plan rounded from the game solution.
  Schedule game_schedule;
  /// Shorter of game_schedule and the coloring incumbent (when enabled).
  Schedule schedule;
  bool used_incumbent = false;
};

SoftOutcome soft_schedule(const ConflictGraph& g, const RateVector& rates,
                          const ExperimentConfig& cfg);

/// Records for one (conflict graph, rates) pair, one per requested mode.
std::vector<ResultRecord> evaluate_modes(const ConflictGraph& g, const RateVector& rates,
                                         long long total_packets, const ExperimentConfig& cfg);

/// Records for replication `run_id`: every beta of the sweep times every
/// requested mode. Deterministic in (cfg, run_id).
std::vector<ResultRecord> run_instance(const ExperimentConfig& cfg, int run_id);

/// Records for a fixture. Topology fixtures are swept over beta; conflict
/// fixtures (which need rates) yield a single beta-less group.
std::vector<ResultRecord> run_fixture(const ExperimentConfig& cfg, const Fixture& fixture);

struct SweepRow {
  int n_nodes = 0;
  int n_sessions = 0;
  double beta_db = 0.0;
  Mode mode = Mode::none;
  int runs = 0;
  double mean_avg_slots_per_packet = 0.0;
  double stderr_avg_slots_per_packet = 0.0;
  /// 1 - mean(mode) / mean(coloring); NaN without a coloring row.
  double mean_gain_vs_coloring = 0.0;
  /// Mean raw slot count, kept for trend checks.
  double mean_slots = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<ResultRecord> records;  // ordered by (run_id, beta, mode)
};

/// Aggregates per-run records into one row per (beta, mode), in sweep order.
std::vector<SweepRow> aggregate(const std::vector<ResultRecord>& records, int runs);

/// Runs every replication (concurrently when cfg.threads allows) and
/// aggregates in run_id order.
SweepResult run_sweep(const ExperimentConfig& cfg);
SweepResult run_sweep(const ExperimentConfig& cfg, const Fixture& fixture);

std::string format_results(const std::vector<SweepRow>& rows);
std::string format_detail(const std::vector<ResultRecord>& records);
void write_results(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
void write_detail(const std::vector<ResultRecord>& records, const std::filesystem::path& path);

}  // namespace softsched
