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

#include "softsched/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "softsched/error.hpp"

namespace softsched {

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("payoff matrix must be nonempty");
  if (entries_.size() != rows_ * cols_) {
    throw InvalidArgument("payoff matrix: entry count does not match dimensions");
  }
  index();
}

PayoffMatrix::PayoffMatrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidArgument("payoff matrix must be nonempty");
  }
  rows_ = rows.size();
  cols_ = rows.front().size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("payoff matrix rows differ in length");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  index();
}

void PayoffMatrix::index() {
  row_support_.assign(rows_, {});
  col_support_.assign(cols_, {});
  nonnegative_ = true;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const double v = entries_[i * cols_ + j];
      if (!std::isfinite(v)) throw InvalidArgument("payoff matrix entries must be finite");
      if (v < 0.0) nonnegative_ = false;
      if (v != 0.0) {
        row_support_[i].push_back({j, v});
        col_support_[j].push_back({i, v});
      }
    }
  }
}

PayoffMatrix build_payoff(const std::vector<Component>& components, const RateVector& rates) {
  if (components.empty()) throw InvalidArgument("build_payoff: no components");
  if (rates.empty()) throw InvalidArgument("build_payoff: no links");
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (rates[i] < 1) {
      throw InvalidArgument("build_payoff: link " + std::to_string(i) +
                            " has rate " + std::to_string(rates[i]) + "; rates must be >= 1");
    }
  }
  const std::size_t rows = rates.size();
  const std::size_t cols = components.size();
  std::vector<double> h(rows * cols, 0.0);
  std::vector<bool> covered(rows, false);
  for (std::size_t j = 0; j < cols; ++j) {
    if (components[j].members.empty()) throw InvalidArgument("build_payoff: empty component");
    for (int l : components[j].members) {
      if (l < 0 || static_cast<std::size_t>(l) >= rows) {
        throw InvalidArgument("build_payoff: component references unknown link " +
                              std::to_string(l));
      }
      h[static_cast<std::size_t>(l) * cols + j] = 1.0 / rates[l];
      covered[l] = true;
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (!covered[i]) {
      throw InvalidArgument("build_payoff: link " + std::to_string(i) +
                            " belongs to no component");
    }
  }
  return PayoffMatrix(rows, cols, std::move(h));
}

// ---------------------------------------------------------------------------
// Fictitious play

FictitiousPlay::FictitiousPlay(const PayoffMatrix& h)
    : h_(&h),
      x_acc_(h.rows(), 0.0),
      y_acc_(h.cols(), 0.0),
      row_counts_(h.rows(), 0),
      col_counts_(h.cols(), 0) {
  if (h.rows() == 0 || h.cols() == 0) throw InvalidArgument("fictitious play: empty matrix");
  for (const auto& e : h.col_support(0)) x_acc_[e.index] += e.value;
  col_counts_[0] = 1;
}

void FictitiousPlay::step() {
  if (k_ > 0) {
    for (const auto& e : h_->col_support(pending_col_)) x_acc_[e.index] += e.value;
    ++col_counts_[pending_col_];
  }

  std::size_t i = 0;
  for (std::size_t m = 1; m < x_acc_.size(); ++m) {
    if (x_acc_[m] < x_acc_[i]) i = m;
  }
  last_row_ = i;
  ++row_counts_[i];
  ++k_;

  if (h_->nonnegative()) {
    // y_acc never decreases, so only touched entries can overtake the max.
    for (const auto& e : h_->row_support(i)) {
      y_acc_[e.index] += e.value;
      const double v = y_acc_[e.index];
      if (v > y_acc_[argmax_y_] || (v == y_acc_[argmax_y_] && e.index < argmax_y_)) {
        argmax_y_ = e.index;
      }
    }
  } else {
    for (const auto& e : h_->row_support(i)) y_acc_[e.index] += e.value;
    argmax_y_ = 0;
    for (std::size_t n = 1; n < y_acc_.size(); ++n) {
      if (y_acc_[n] > y_acc_[argmax_y_]) argmax_y_ = n;
    }
  }
  pending_col_ = argmax_y_;

  const double k = static_cast<double>(k_);
  const double lower = x_acc_[last_row_] / k;
  const double upper = y_acc_[pending_col_] / k;
  if (lower > best_lower_) {
    best_lower_ = lower;
    best_y_.resize(col_counts_.size());
    for (std::size_t j = 0; j < col_counts_.size(); ++j) {
      best_y_[j] = static_cast<double>(col_counts_[j]) / k;
    }
  }
  if (upper < best_upper_) {
    best_upper_ = upper;
    best_x_.resize(row_counts_.size());
    for (std::size_t i = 0; i < row_counts_.size(); ++i) {
      best_x_[i] = static_cast<double>(row_counts_[i]) / k;
    }
  }
}

double FictitiousPlay::value_lower() const {
  if (k_ == 0) return *std::min_element(x_acc_.begin(), x_acc_.end());
  return x_acc_[last_row_] / static_cast<double>(k_);
}

double FictitiousPlay::value_upper() const {
  if (k_ == 0) return std::numeric_limits<double>::infinity();
  return y_acc_[pending_col_] / static_cast<double>(k_);
}

GameSolution FictitiousPlay::solution(bool converged) const {
  if (k_ == 0) throw std::logic_error("fictitious play: no iterations yet");
  GameSolution s;
  s.x = best_x_;
  s.y = best_y_;
  s.value_lower = best_lower_;
  s.value_upper = best_upper_;
  s.iterations = k_;
  s.converged = converged;
  return s;
}

GameSolution fp_solve(const PayoffMatrix& h, const SolverConfig& cfg) {
  if (!(cfg.delta > 0.0)) throw InvalidArgument("fp_solve: delta must be positive");
  if (cfg.max_iterations == 0) throw InvalidArgument("fp_solve: max_iterations must be positive");
  FictitiousPlay fp(h);
  while (true) {
    fp.step();
    if (fp.best_gap() <= cfg.delta) return fp.solution(true);
    if (fp.iterations() >= cfg.max_iterations) return fp.solution(false);
  }
}

// ---------------------------------------------------------------------------
// Exact oracle

namespace {

// Solves the square system in place; false when (numerically) singular.
bool solve_linear(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (std::abs(a[pivot * n + col]) < 1e-12) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
    b[r] = s / a[r * n + r];
  }
  return true;
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12) return a[i] < b[i];
  }
  return false;
}

double min_supported(const PayoffMatrix& h, const std::vector<double>& y) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    double v = 0.0;
    for (const auto& e : h.row_support(i)) v += e.value * y[e.index];
    worst = std::min(worst, v);
  }
  return worst;
}

}  // namespace

OracleSolution lp_oracle(const PayoffMatrix& h, std::size_t max_columns) {
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  if (rows == 0 || cols == 0) throw InvalidArgument("lp_oracle: empty matrix");
  if (cols > max_columns) {
    throw UnsupportedSize("lp_oracle: " + std::to_string(cols) +
                          " columns exceed the exact-solver limit of " +
                          std::to_string(max_columns));
  }

  constexpr double kFeasTol = 1e-9;
  constexpr double kTieTol = 1e-10;
  double best_t = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> optimal;

  // A vertex of {(y, t) : Hy >= t, sum y = 1, y >= 0} fixes y = 0 outside a
  // support S and makes |S| row constraints tight, giving a square system in
  // (y_S, t).
  for (std::size_t s = 1; s <= std::min(rows, cols); ++s) {
    const std::size_t dim = s + 1;
    std::vector<std::size_t> support(s);
    std::iota(support.begin(), support.end(), 0);
    do {
      std::vector<std::size_t> tight(s);
      std::iota(tight.begin(), tight.end(), 0);
      do {
        std::vector<double> a(dim * dim, 0.0);
        std::vector<double> b(dim, 0.0);
        for (std::size_t r = 0; r < s; ++r) {
          for (std::size_t q = 0; q < s; ++q) a[r * dim + q] = h(tight[r], support[q]);
          a[r * dim + s] = -1.0;
        }
        for (std::size_t q = 0; q < s; ++q) a[s * dim + q] = 1.0;
        b[s] = 1.0;
        if (!solve_linear(a, b, dim)) continue;

        std::vector<double> y(cols, 0.0);
        bool feasible = true;
        for (std::size_t q = 0; q < s && feasible; ++q) {
          if (b[q] < -kFeasTol) feasible = false;
          y[support[q]] = std::max(0.0, b[q]);
        }
        if (!feasible) continue;
        const double t = b[s];
        if (min_supported(h, y) < t - kFeasTol) continue;

        if (t > best_t + kTieTol) {
          best_t = t;
          optimal.clear();
        }
        if (t >= best_t - kTieTol) optimal.push_back(std::move(y));
      } while (next_subset(tight, rows));
    } while (next_subset(support, cols));
  }

  if (optimal.empty()) throw std::logic_error("lp_oracle: no feasible vertex found");
  std::vector<double> chosen = optimal.front();
  for (const auto& y : optimal) {
    if (lex_less(y, chosen)) chosen = y;
  }
  OracleSolution out;
  out.value = min_supported(h, chosen);
  out.y = std::move(chosen);
  return out;
}

std::vector<double> supported_rates(const PayoffMatrix& h, std::span<const double> y) {
  if (y.size() != h.cols()) {
    throw InvalidArgument("supported_rates: y has " + std::to_string(y.size()) +
                          " entries for " + std::to_string(h.cols()) + " components");
  }
  std::vector<double> out(h.rows(), 0.0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (const auto& e : h.row_support(i)) out[i] += e.value * y[e.index];
  }
  return out;
}

std::size_t bottleneck(const PayoffMatrix& h, std::span<const double> y) {
  const auto rates = supported_rates(h, y);
  const double lowest = *std::min_element(rates.begin(), rates.end());
  // Values equal up to rounding count as ties.
  const double tol = 1e-12 * std::max(1.0, std::abs(lowest));
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (rates[i] <= lowest + tol) return i;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Integer schedules

std::vector<long long> Schedule::slot_counts() const {
  std::vector<long long> counts(components.size(), 0);
  for (std::size_t j : slots) ++counts[j];
  return counts;
}

Schedule extract_schedule(const std::vector<Component>& components, const RateVector& rates,
                          std::span<const double> y, double value_lower,
                          const ConflictGraph& g) {
  if (!(value_lower > 0.0) || !std::isfinite(value_lower)) {
    throw InvalidArgument("extract_schedule: game value must be positive");
  }
  const std::size_t n_comp = components.size();
  const std::size_t n_links = rates.size();
  if (y.size() != n_comp) throw InvalidArgument("extract_schedule: y does not match components");
  if (g.size() != n_links) throw InvalidArgument("extract_schedule: rates do not match graph");
  for (const auto& c : components) {
    for (int l : c.members) {
      if (l < 0 || static_cast<std::size_t>(l) >= n_links) {
        throw InvalidArgument("extract_schedule: component references unknown link");
      }
    }
  }

  const auto total = static_cast<long long>(std::ceil(1.0 / value_lower - 1e-9));

  // Largest-remainder apportionment of `total` slots.
  std::vector<long long> count(n_comp, 0);
  std::vector<double> remainder(n_comp, 0.0);
  long long assigned = 0;
  for (std::size_t j = 0; j < n_comp; ++j) {
    const double quota = std::max(0.0, y[j]) * static_cast<double>(total);
    count[j] = static_cast<long long>(std::floor(quota + 1e-9));
    remainder[j] = quota - static_cast<double>(count[j]);
    assigned += count[j];
  }
  std::vector<std::size_t> order(n_comp);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t p = 0; p < n_comp && assigned < total; ++p, ++assigned) ++count[order[p]];

  std::vector<long long> served(n_links, 0);
  for (std::size_t j = 0; j < n_comp; ++j) {
    for (int l : components[j].members) served[l] += count[j];
  }

  // Repair.
  while (true) {
    std::size_t best = n_comp;
    std::size_t best_cover = 0;
    for (std::size_t j = 0; j < n_comp; ++j) {
      std::size_t cover = 0;
      for (int l : components[j].members) cover += served[l] < rates[l] ? 1 : 0;
      if (cover > best_cover) {
        best = j;
        best_cover = cover;
      }
    }
    if (best == n_comp) break;
    ++count[best];
    for (int l : components[best].members) ++served[l];
  }
  for (std::size_t i = 0; i < n_links; ++i) {
    if (served[i] < rates[i]) {
      throw InvalidArgument("extract_schedule: link " + std::to_string(i) +
                            " belongs to no component");
    }
  }

  // Trim.
  for (std::size_t j = n_comp; j-- > 0;) {
    const auto& members = components[j].members;
    while (count[j] > 0 && std::all_of(members.begin(), members.end(), [&](int l) {
             return served[l] - 1 >= rates[l];
           })) {
      --count[j];
      for (int l : members) --served[l];
    }
  }

  Schedule s;
  s.components = components;
  s.served = std::move(served);
  for (std::size_t j = 0; j < n_comp; ++j) s.slots.insert(s.slots.end(), count[j], j);
  return s;
}

Schedule coloring_schedule(const std::vector<std::vector<int>>& classes, const RateVector& rates) {
  Schedule s;
  s.served.assign(rates.size(), 0);
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    Component c{cls};
    std::sort(c.members.begin(), c.members.end());
    long long busiest = 0;
    for (int l : c.members) {
      if (l < 0 || static_cast<std::size_t>(l) >= rates.size()) {
        throw InvalidArgument("coloring_schedule: class references unknown link");
      }
      busiest = std::max<long long>(busiest, rates[l]);
    }
    const std::size_t j = s.components.size();
    s.components.push_back(std::move(c));
    s.slots.insert(s.slots.end(), static_cast<std::size_t>(busiest), j);
    for (int l : s.components.back().members) s.served[l] += busiest;
  }
  return s;
}

ScheduleCheck verify_schedule(const Schedule& s, const ConflictGraph& g, const RateVector& rates) {
  auto fail = [](std::string why) { return ScheduleCheck{false, std::move(why)}; };
  if (rates.size() != g.size()) {
    return fail("rate vector has " + std::to_string(rates.size()) + " entries for " +
                std::to_string(g.size()) + " links");
  }
  std::vector<long long> served(g.size(), 0);
  for (std::size_t t = 0; t < s.slots.size(); ++t) {
    const std::size_t j = s.slots[t];
    if (j >= s.components.size()) {
      return fail("slot " + std::to_string(t) + " names unknown component " + std::to_string(j));
    }
    const auto& members = s.components[j].members;
    for (std::size_t p = 0; p < members.size(); ++p) {
      if (members[p] < 0 || static_cast<std::size_t>(members[p]) >= g.size()) {
        return fail("slot " + std::to_string(t) + " activates unknown link " +
                    std::to_string(members[p]));
      }
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        if (g.conflicts(static_cast<std::size_t>(members[p]),
                        static_cast<std::size_t>(members[q]))) {
          return fail("slot " + std::to_string(t) + ": links " + std::to_string(members[p]) +
                      " and " + std::to_string(members[q]) + " conflict");
        }
      }
      ++served[members[p]];
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (served[i] < rates[i]) {
      return fail("link " + std::to_string(i) + " served " + std::to_string(served[i]) +
                  " times, needs " + std::to_string(rates[i]));
    }
  }
  if (!s.served.empty() && s.served != served) {
    return fail("recorded per-link service counts do not match the slots");
  }
  return {};
}

}  // namespace softsched
