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
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softsched/components.hpp"
#include "softsched/conflict.hpp"
#include "softsched/topology.hpp"

namespace softsched {

/// Dense payoff matrix of the link (row, minimizer) versus component
/// (column, maximizer) game. Nonzero patterns are cached per row and column.
class PayoffMatrix {
 public:
  struct Entry {
    std::size_t index;
    double value;
  };

  PayoffMatrix() = default;
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  /// Row-major nested form; all rows must have equal length.
  explicit PayoffMatrix(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Nonzero entries of row i, indexed by column.
  std::span<const Entry> row_support(std::size_t i) const { return row_support_[i]; }
  /// Nonzero entries of column j, indexed by row.
  std::span<const Entry> col_support(std::size_t j) const { return col_support_[j]; }

  bool nonnegative() const noexcept { return nonnegative_; }

 private:
  void index();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
  std::vector<std::vector<Entry>> row_support_;
  std::vector<std::vector<Entry>> col_support_;
  bool nonnegative_ = true;
};

/// h_ij = 1 / r_i when link i belongs to component j, else 0.
PayoffMatrix build_payoff(const std::vector<Component>& components, const RateVector& rates);

struct SolverConfig {
  double delta = 1e-3;
  std::size_t max_iterations = 1000000;
};

struct GameSolution {
  std::vector<double> x;  // link (row) mixed strategy
  std::vector<double> y;  // component usage frequencies
  double value_lower = 0.0;
  double value_upper = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Fictitious play on a payoff matrix, one best-response pair per step.
///
/// The column player opens with column 0, so x_acc starts as that column.
/// Each step the row player answers the accumulated columns with
/// argmin x_acc, the row is added to y_acc, and the column player answers
/// with argmax y_acc. Ties go to the lowest index. After k steps x_acc and
/// y_acc each hold k pure strategies, so min(x_acc)/k and max(y_acc)/k
/// bracket the game value. The column picked at step k enters x_acc at the
/// start of step k+1.
///
/// Both bounds stay valid at every step, so the solver also keeps the best
/// lower bound seen (with the column frequencies that attain it) and the best
/// upper bound seen; convergence is judged on that running gap.
class FictitiousPlay {
 public:
  explicit FictitiousPlay(const PayoffMatrix& h);

  void step();

  std::size_t iterations() const noexcept { return k_; }
  double value_lower() const;
  double value_upper() const;
  double gap() const { return value_upper() - value_lower(); }

  double best_lower() const noexcept { return best_lower_; }
  double best_upper() const noexcept { return best_upper_; }
  double best_gap() const noexcept { return best_upper_ - best_lower_; }

  std::size_t last_row() const noexcept { return last_row_; }
  std::size_t last_col() const noexcept { return pending_col_; }

  const std::vector<double>& x_acc() const noexcept { return x_acc_; }
  const std::vector<double>& y_acc() const noexcept { return y_acc_; }
  /// Row picks so far; sums to iterations().
  const std::vector<std::size_t>& row_counts() const noexcept { return row_counts_; }
  /// Column picks held in x_acc; sums to iterations() (the pending pick is
  /// excluded).
  const std::vector<std::size_t>& col_counts() const noexcept { return col_counts_; }

  /// Strategies and bounds from the best iterations seen so far.
  GameSolution solution(bool converged) const;

 private:
  const PayoffMatrix* h_;
  std::vector<double> x_acc_;
  std::vector<double> y_acc_;
  std::vector<std::size_t> row_counts_;
  std::vector<std::size_t> col_counts_;
  std::size_t k_ = 0;
  std::size_t last_row_ = 0;
  std::size_t pending_col_ = 0;
  std::size_t argmax_y_ = 0;

  double best_lower_ = -std::numeric_limits<double>::infinity();
  double best_upper_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_y_;
  std::vector<double> best_x_;
};

/// Runs fictitious play until best_gap() <= delta or max_iterations steps.
/// Hitting the budget is reported through `converged`, not thrown.
GameSolution fp_solve(const PayoffMatrix& h, const SolverConfig& cfg = {});

inline constexpr std::size_t kDefaultExactColumnLimit = 12;

struct OracleSolution {
  double value = 0.0;
  std::vector<double> y;
};

/// Exact value of max_y min_i (Hy)_i by enumerating every basic solution of
/// the linear program. Returns the lexicographically smallest optimal vertex.
/// Throws UnsupportedSize when H has more than `max_columns` columns.
OracleSolution lp_oracle(const PayoffMatrix& h,
                         std::size_t max_columns = kDefaultExactColumnLimit);

/// (Hy)_i: fraction of link i's demand served per slot under usage y.
std::vector<double> supported_rates(const PayoffMatrix& h, std::span<const double> y);

/// Link with the smallest supported fraction (lowest index on ties).
std::size_t bottleneck(const PayoffMatrix& h, std::span<const double> y);

/// Integer slot plan: `slots[t]` indexes into `components`.
struct Schedule {
  std::vector<Component> components;
  std::vector<std::size_t> slots;
  std::vector<long long> served;

  std::size_t length() const noexcept { return slots.size(); }
  /// Slots assigned to each component.
  std::vector<long long> slot_counts() const;
};

/// Rounds usage frequencies y into whole slots.
///
/// Starts from ceil(1/value_lower) slots split by largest remainder, adds
/// slots of the component covering the most under-served links until every
/// demand is met, then drops redundant slots scanning components from the
/// highest index down.
Schedule extract_schedule(const std::vector<Component>& components, const RateVector& rates,
                          std::span<const double> y, double value_lower,
                          const ConflictGraph& g);

/// Hard coloring expressed as a slot plan: class c occupies max rate of its
/// members consecutive slots.
Schedule coloring_schedule(const std::vector<std::vector<int>>& classes, const RateVector& rates);

struct ScheduleCheck {
  bool ok = true;
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

/// Every slot conflict-free and every link served at least its rate.
ScheduleCheck verify_schedule(const Schedule& s, const ConflictGraph& g, const RateVector& rates);

}  // namespace softsched
