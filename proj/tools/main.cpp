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

// softsched: Monte Carlo sweep of soft scheduling against coloring baselines.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "softsched/error.hpp"
#include "softsched/fixture.hpp"
#include "softsched/harness.hpp"

namespace {

struct Flags {
  std::string config;
  std::string fixture;
  std::string out;
  std::string detail;
  std::string solver;
  std::string modes;
  int nodes = 0;
  int sessions = 0;
  double beta_min = 0, beta_max = 0, beta_step = 0;
  double alpha = 0, poisson_mean = 0, delta = 0;
  int runs = 0;
  std::uint64_t seed = 0;
  std::size_t max_iters = 0;
  std::size_t component_cap = 0;
  unsigned threads = 0;
  bool no_incumbent = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft-coloring link scheduling experiments"};
  Flags f;
  softsched::ExperimentConfig defaults;

  app.add_option("--config", f.config, "JSON experiment config; flags override its values")
      ->check(CLI::ExistingFile);
  auto* nodes = app.add_option("--nodes", f.nodes, "Nodes per topology");
  auto* sessions = app.add_option("--sessions", f.sessions, "Source-sink sessions per topology");
  auto* beta_min = app.add_option("--beta-min", f.beta_min, "First interference margin (dB)");
  auto* beta_max = app.add_option("--beta-max", f.beta_max, "Last interference margin (dB)");
  auto* beta_step = app.add_option("--beta-step", f.beta_step, "Margin step (dB)");
  auto* alpha = app.add_option("--alpha", f.alpha, "Attenuation exponent (default 4)");
  auto* poisson = app.add_option("--poisson-mean", f.poisson_mean,
                                 "Mean packets per session (default 5)");
  auto* runs = app.add_option("--runs", f.runs, "Replications (default 1000)");
  auto* seed = app.add_option("--seed", f.seed, "Root seed");
  auto* solver = app.add_option("--solver", f.solver, "Game solver")
                     ->check(CLI::IsMember({"fp", "exact"}));
  auto* delta = app.add_option("--delta", f.delta, "Fictitious play stopping gap");
  auto* max_iters = app.add_option("--max-iters", f.max_iters, "Fictitious play iteration budget");
  auto* modes = app.add_option("--modes", f.modes, "Comma list of soft,coloring,none");
  auto* cap = app.add_option("--component-cap", f.component_cap, "Component enumeration limit");
  auto* threads = app.add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  app.add_flag("--no-incumbent", f.no_incumbent,
               "Report the game-derived schedule even when greedy coloring is shorter");
  app.add_option("--fixture", f.fixture, "Topology or conflict-graph fixture (JSON)");
  app.add_option("--out", f.out, "Results CSV (stdout when omitted)");
  app.add_option("--detail", f.detail, "Per-run detail CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    softsched::ExperimentConfig cfg =
        f.config.empty() ? defaults : softsched::read_experiment_config(f.config);
    if (*nodes) cfg.n_nodes = f.nodes;
    if (*sessions) cfg.n_sessions = f.sessions;
    if (*beta_min) cfg.beta.min_db = f.beta_min;
    if (*beta_max) cfg.beta.max_db = f.beta_max;
    if (*beta_step) cfg.beta.step_db = f.beta_step;
    if (*alpha) cfg.alpha = f.alpha;
    if (*poisson) cfg.poisson_mean = f.poisson_mean;
    if (*runs) cfg.runs = f.runs;
    if (*seed) cfg.seed = f.seed;
    if (*solver) cfg.solver = softsched::parse_solver(f.solver);
    if (*delta) cfg.delta = f.delta;
    if (*max_iters) cfg.max_iterations = f.max_iters;
    if (*modes) cfg.modes = softsched::parse_modes(f.modes);
    if (*cap) cfg.component_cap = f.component_cap;
    if (*threads) cfg.threads = f.threads;
    if (f.no_incumbent) cfg.coloring_incumbent = false;

    const auto result = f.fixture.empty()
                            ? softsched::run_sweep(cfg)
                            : softsched::run_sweep(cfg, softsched::read_fixture(f.fixture));
    if (f.out.empty()) {
      std::cout << softsched::format_results(result.rows);
    } else {
      softsched::write_results(result.rows, f.out);
    }
    if (!f.detail.empty()) softsched::write_detail(result.records, f.detail);
  } catch (const std::exception& e) {
    std::cerr << "softsched: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
