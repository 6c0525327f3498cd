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

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "softsched/error.hpp"
#include "softsched/harness.hpp"

namespace softsched {

namespace {

// Nine significant digits, '.' separator, independent of the C locale.
std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_file(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file", path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing output file", path.string());
}

}  // namespace

std::string format_results(const std::vector<SweepRow>& rows) {
  std::string out =
      "n_nodes,n_sessions,beta_db,mode,runs,mean_avg_slots_per_packet,stderr,"
      "mean_gain_vs_coloring\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.n_nodes) + ',' + std::to_string(r.n_sessions) + ',' +
           number(r.beta_db) + ',' + std::string(to_string(r.mode)) + ',' +
           std::to_string(r.runs) + ',' + number(r.mean_avg_slots_per_packet) + ',' +
           number(r.stderr_avg_slots_per_packet) + ',' + number(r.mean_gain_vs_coloring) + '\n';
  }
  return out;
}

std::string format_detail(const std::vector<ResultRecord>& records) {
  std::string out =
      "n_nodes,n_sessions,run_id,beta_db,mode,total_packets,total_link_activations,slots,"
      "avg_slots_per_packet,game_value_lower,game_value_upper,fp_iterations,converged\n";
  for (const ResultRecord& r : records) {
    const bool soft = r.mode == Mode::soft;
    out += std::to_string(r.n_nodes) + ',' + std::to_string(r.n_sessions) + ',' +
           std::to_string(r.run_id) + ',' + number(r.beta_db) + ',' +
           std::string(to_string(r.mode)) + ',' + std::to_string(r.total_packets) + ',' +
           std::to_string(r.total_link_activations) + ',' + std::to_string(r.slots) + ',' +
           number(r.avg_slots_per_packet) + ',' + (soft ? number(r.game_value_lower) : "") +
           ',' + (soft ? number(r.game_value_upper) : "") + ',' +
           (soft ? std::to_string(r.fp_iterations) : "") + ',' +
           (soft ? (r.converged ? "1" : "0") : "") + '\n';
  }
  return out;
}

void write_results(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  write_file(format_results(rows), path);
}

void write_detail(const std::vector<ResultRecord>& records, const std::filesystem::path& path) {
  write_file(format_detail(records), path);
}

}  // namespace softsched
