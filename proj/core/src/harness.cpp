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

#include "softsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "softsched/error.hpp"

namespace softsched {

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::soft:
      return "soft";
    case Mode::coloring:
      return "coloring";
    case Mode::none:
      return "none";
  }
  return "?";
}

std::string_view to_string(SolverKind s) noexcept {
  return s == SolverKind::fp ? "fp" : "exact";
}

Mode parse_mode(std::string_view s) {
  if (s == "soft") return Mode::soft;
  if (s == "coloring") return Mode::coloring;
  if (s == "none") return Mode::none;
  throw InvalidArgument("unknown mode '" + std::string(s) + "' (expected soft, coloring or none)");
}

SolverKind parse_solver(std::string_view s) {
  if (s == "fp") return SolverKind::fp;
  if (s == "exact") return SolverKind::exact;
  throw InvalidArgument("unknown solver '" + std::string(s) + "' (expected fp or exact)");
}

std::vector<Mode> parse_modes(std::string_view s) {
  std::vector<Mode> modes;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto token = s.substr(0, comma);
    if (!token.empty()) {
      const Mode m = parse_mode(token);
      if (std::find(modes.begin(), modes.end(), m) == modes.end()) modes.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (modes.empty()) throw InvalidArgument("empty mode list");
  return modes;
}

std::vector<double> BetaSweep::values() const {
  if (!(step_db > 0.0)) throw InvalidArgument("beta step must be positive");
  const auto steps = static_cast<long long>(std::floor((max_db - min_db) / step_db + 1e-9));
  std::vector<double> out;
  for (long long i = 0; i <= steps; ++i) out.push_back(min_db + static_cast<double>(i) * step_db);
  return out;
}

long long Instance::total_packets() const {
  long long total = 0;
  for (const Session& s : sessions) total += s.packets;
  return total;
}

Instance make_instance(const ExperimentConfig& cfg, int run_id) {
  Rng rng = Rng::for_run(cfg.seed, static_cast<std::uint64_t>(run_id));
  Instance inst;
  inst.nodes = generate_nodes(cfg.n_nodes, rng);
  inst.sessions = generate_sessions(cfg.n_nodes, cfg.n_sessions, cfg.poisson_mean, rng);
  const PropagationParams params{cfg.alpha};
  inst.paths = route_sessions(inst.nodes, inst.sessions, params);
  inst.load = accumulate_rates(inst.nodes, inst.paths, inst.sessions);
  return inst;
}

Instance make_instance(const TopologyFixture& fixture, const PropagationParams& params) {
  Instance inst;
  inst.nodes = fixture.nodes;
  inst.sessions = fixture.sessions;
  inst.paths = route_sessions(inst.nodes, inst.sessions, params);
  inst.load = accumulate_rates(inst.nodes, inst.paths, inst.sessions);
  return inst;
}

SoftOutcome soft_schedule(const ConflictGraph& g, const RateVector& rates,
                          const ExperimentConfig& cfg) {
  SoftOutcome out;
  out.components = enumerate_maximal(g, cfg.component_cap);
  const PayoffMatrix h = build_payoff(out.components, rates);
  if (cfg.solver == SolverKind::exact) {
    const OracleSolution exact = lp_oracle(h);
    out.solution.y = exact.y;
    out.solution.value_lower = exact.value;
    out.solution.value_upper = exact.value;
    out.solution.converged = true;
  } else {
    out.solution = fp_solve(h, SolverConfig{cfg.delta, cfg.max_iterations});
  }
  out.game_schedule =
      extract_schedule(out.components, rates, out.solution.y, out.solution.value_lower, g);
  out.schedule = out.game_schedule;
  if (cfg.coloring_incumbent) {
    Schedule incumbent = coloring_schedule(greedy_color(g).classes, rates);
    if (incumbent.length() < out.schedule.length()) {
      out.schedule = std::move(incumbent);
      out.used_incumbent = true;
    }
  }
  return out;
}

std::vector<ResultRecord> evaluate_modes(const ConflictGraph& g, const RateVector& rates,
                                         long long total_packets, const ExperimentConfig& cfg) {
  std::vector<ResultRecord> out;
  for (Mode mode : cfg.modes) {
    ResultRecord r;
    r.mode = mode;
    r.total_packets = total_packets;
    r.total_link_activations = no_schedule_slots(rates);
    switch (mode) {
      case Mode::soft: {
        const SoftOutcome soft = soft_schedule(g, rates, cfg);
        r.slots = static_cast<long long>(soft.schedule.length());
        r.game_value_lower = soft.solution.value_lower;
        r.game_value_upper = soft.solution.value_upper;
        r.fp_iterations = soft.solution.iterations;
        r.converged = soft.solution.converged;
        break;
      }
      case Mode::coloring:
        r.slots = coloring_slots(greedy_color(g), rates);
        break;
      case Mode::none:
        r.slots = no_schedule_slots(rates);
        break;
    }
    r.avg_slots_per_packet =
        total_packets > 0 ? static_cast<double>(r.slots) / static_cast<double>(total_packets)
                          : 0.0;
    out.push_back(r);
  }
  return out;
}

namespace {

// Rethrows the active exception with `context` prefixed, keeping its type.
[[noreturn]] void rethrow_with_context(const std::string& context) {
  try {
    throw;
  } catch (const ResourceLimit& e) {
    throw ResourceLimit(context + ": " + e.what(), e.cap());
  } catch (const UnsupportedSize& e) {
    throw UnsupportedSize(context + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(context + ": " + e.what());
  }
}

std::string beta_label(double beta) {
  return std::isnan(beta) ? std::string("n/a") : std::to_string(beta);
}

std::vector<ResultRecord> sweep_instance(const ExperimentConfig& cfg, const Instance& inst,
                                         int run_id, int n_nodes, int n_sessions) {
  std::vector<ResultRecord> out;
  for (double beta : cfg.beta.values()) {
    try {
      const ConflictParams params{beta, PropagationParams{cfg.alpha}};
      const ConflictGraph g = build_conflict_graph(inst.load.links, inst.nodes, params);
      for (ResultRecord& r : evaluate_modes(g, inst.load.rates, inst.total_packets(), cfg)) {
        r.n_nodes = n_nodes;
        r.n_sessions = n_sessions;
        r.run_id = run_id;
        r.beta_db = beta;
        out.push_back(r);
      }
    } catch (const std::exception&) {
      rethrow_with_context("run " + std::to_string(run_id) + ", beta " + beta_label(beta));
    }
  }
  return out;
}

}  // namespace

std::vector<ResultRecord> run_instance(const ExperimentConfig& cfg, int run_id) {
  cfg.validate();
  Instance inst;
  try {
    inst = make_instance(cfg, run_id);
  } catch (const std::exception&) {
    rethrow_with_context("run " + std::to_string(run_id));
  }
  return sweep_instance(cfg, inst, run_id, cfg.n_nodes, cfg.n_sessions);
}

std::vector<ResultRecord> run_fixture(const ExperimentConfig& cfg, const Fixture& fixture) {
  if (const auto* topo = std::get_if<TopologyFixture>(&fixture)) {
    const Instance inst = make_instance(*topo, PropagationParams{cfg.alpha});
    if (inst.load.links.empty()) {
      throw InvalidArgument("fixture: no session carries traffic");
    }
    return sweep_instance(cfg, inst, 0, static_cast<int>(topo->nodes.size()),
                          static_cast<int>(topo->sessions.size()));
  }
  const auto& cf = std::get<ConflictFixture>(fixture);
  if (cf.rates.empty()) throw InvalidArgument("conflict fixture: 'rates' are required to run");
  // Every link stands for one single-hop session, so packets = activations.
  auto records = evaluate_modes(cf.graph, cf.rates, no_schedule_slots(cf.rates), cfg);
  for (ResultRecord& r : records) {
    r.beta_db = std::numeric_limits<double>::quiet_NaN();
  }
  return records;
}

std::vector<SweepRow> aggregate(const std::vector<ResultRecord>& records, int runs) {
  struct Group {
    double beta;
    Mode mode;
    std::vector<double> per_packet;
    std::vector<double> slots;
  };
  auto same_beta = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
  std::vector<Group> groups;
  for (const ResultRecord& r : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.mode == r.mode && same_beta(g.beta, r.beta_db);
    });
    if (it == groups.end()) it = groups.insert(groups.end(), Group{r.beta_db, r.mode, {}, {}});
    it->per_packet.push_back(r.avg_slots_per_packet);
    it->slots.push_back(static_cast<double>(r.slots));
  }

  const int n_nodes = records.empty() ? 0 : records.front().n_nodes;
  const int n_sessions = records.empty() ? 0 : records.front().n_sessions;
  std::vector<SweepRow> rows;
  for (const Group& g : groups) {
    const auto n = static_cast<double>(g.per_packet.size());
    const double mean = std::accumulate(g.per_packet.begin(), g.per_packet.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : g.per_packet) ss += (v - mean) * (v - mean);
    SweepRow row;
    row.n_nodes = n_nodes;
    row.n_sessions = n_sessions;
    row.beta_db = g.beta;
    row.mode = g.mode;
    row.runs = runs;
    row.mean_avg_slots_per_packet = mean;
    row.stderr_avg_slots_per_packet = g.per_packet.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
    row.mean_slots = std::accumulate(g.slots.begin(), g.slots.end(), 0.0) / n;
    row.mean_gain_vs_coloring = std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  for (SweepRow& row : rows) {
    for (const SweepRow& ref : rows) {
      if (ref.mode == Mode::coloring && same_beta(ref.beta_db, row.beta_db) &&
          ref.mean_avg_slots_per_packet > 0.0) {
        row.mean_gain_vs_coloring = 1.0 - row.mean_avg_slots_per_packet / ref.mean_avg_slots_per_packet;
      }
    }
  }
  return rows;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto runs = static_cast<std::size_t>(cfg.runs);
  std::vector<std::vector<ResultRecord>> per_run(runs);
  std::vector<std::exception_ptr> errors(runs);

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(std::min<std::size_t>(runs, 256)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        per_run[r] = run_instance(cfg, static_cast<int>(r));
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult result;
  for (auto& recs : per_run) {
    result.records.insert(result.records.end(), recs.begin(), recs.end());
  }
  result.rows = aggregate(result.records, cfg.runs);
  return result;
}

SweepResult run_sweep(const ExperimentConfig& cfg, const Fixture& fixture) {
  SweepResult result;
  result.records = run_fixture(cfg, fixture);
  result.rows = aggregate(result.records, 1);
  return result;
}

}  // namespace softsched
