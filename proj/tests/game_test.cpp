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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ex3.hpp"
#include "oracles.hpp"
#include "softsched/coloring.hpp"
#include "softsched/components.hpp"
#include "softsched/error.hpp"
#include "softsched/game.hpp"

using namespace softsched;

namespace {

std::vector<Component> ex3_components() { return {{{0, 1}}, {{0, 2}}}; }

struct RandomGame {
  ConflictGraph graph;
  RateVector rates;
  std::vector<Component> components;
  PayoffMatrix h;
};

// Random conflict graph on <= max_links links whose maximal sets number at
// most max_cols.
RandomGame random_game(std::mt19937_64& rng, std::size_t max_links, std::size_t max_cols) {
  while (true) {
    const std::size_t n = 1 + rng() % max_links;
    const double p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
    auto g = oracle::random_graph(n, p, rng);
    auto comps = enumerate_maximal(g);
    if (comps.size() > max_cols) continue;
    auto rates = oracle::random_rates(n, 1, 9, rng);
    PayoffMatrix h = build_payoff(comps, rates);
    return {std::move(g), std::move(rates), std::move(comps), std::move(h)};
  }
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("payoff matrix for the three-link example") {
  const auto h = build_payoff(ex3_components(), testing::ex3_rates());
  REQUIRE(h.rows() == 3);
  REQUIRE(h.cols() == 2);
  CHECK(h(0, 0) == doctest::Approx(1.0 / 3));
  CHECK(h(0, 1) == doctest::Approx(1.0 / 3));
  CHECK(h(1, 0) == 1.0);
  CHECK(h(1, 1) == 0.0);
  CHECK(h(2, 0) == 0.0);
  CHECK(h(2, 1) == 0.5);
  CHECK(h.row_support(1).size() == 1);
  CHECK(h.col_support(0).size() == 2);
}

TEST_CASE("payoff matrix preconditions") {
  CHECK(build_payoff({{{0}}}, RateVector{4})(0, 0) == 0.25);
  CHECK_THROWS_AS(build_payoff(ex3_components(), RateVector{3, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(build_payoff({{{0, 1}}}, RateVector{1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(build_payoff({}, RateVector{1}), InvalidArgument);
  CHECK_THROWS_AS(build_payoff({{{5}}}, RateVector{1}), InvalidArgument);
  CHECK_THROWS_AS(PayoffMatrix(std::vector<std::vector<double>>{{1.0, 2.0}, {1.0}}),
                  InvalidArgument);
}

TEST_CASE("fictitious play on tiny games") {
  SUBCASE("1x1") {
    const PayoffMatrix h(1, 1, {0.7});
    const auto s = fp_solve(h);
    CHECK(s.converged);
    CHECK(s.value_lower == doctest::Approx(0.7));
    CHECK(s.value_upper == doctest::Approx(0.7));
    CHECK(s.x == std::vector<double>{1.0});
    CHECK(s.y == std::vector<double>{1.0});
  }
  SUBCASE("matching pennies style identity") {
    const PayoffMatrix h({{1.0, 0.0}, {0.0, 1.0}});
    const auto s = fp_solve(h, {1e-3, 100000});
    CHECK(s.converged);
    CHECK(s.value_lower <= 0.5);
    CHECK(s.value_upper >= 0.5);
    CHECK(s.y[0] == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(s.y[1] == doctest::Approx(0.5).epsilon(1e-3));
  }
  SUBCASE("three-link example") {
    const auto h = build_payoff(ex3_components(), testing::ex3_rates());
    const auto s = fp_solve(h, {1e-3, 1000000});
    CHECK(s.converged);
    CHECK(s.value_lower <= 1.0 / 3 + 1e-12);
    CHECK(s.value_upper >= 1.0 / 3 - 1e-12);
    CHECK(s.value_upper - s.value_lower <= 1e-3);
    CHECK(std::abs(s.y[0] - 1.0 / 3) <= 1e-2);
    CHECK(std::abs(s.y[1] - 2.0 / 3) <= 1e-2);
    // The returned y attains the returned lower bound.
    const auto hy = supported_rates(h, s.y);
    CHECK(*std::min_element(hy.begin(), hy.end()) == doctest::Approx(s.value_lower));
  }
}

TEST_CASE("fictitious play bookkeeping") {
  const auto h = build_payoff(ex3_components(), testing::ex3_rates());
  FictitiousPlay fp(h);
  for (int k = 1; k <= 500; ++k) {
    fp.step();
    const auto& rc = fp.row_counts();
    const auto& cc = fp.col_counts();
    CHECK(fp.iterations() == static_cast<std::size_t>(k));
    CHECK(std::accumulate(rc.begin(), rc.end(), std::size_t{0}) == fp.iterations());
    CHECK(std::accumulate(cc.begin(), cc.end(), std::size_t{0}) == fp.iterations());
    // x_acc is H times the column counts, y_acc is H^T times the row counts.
    for (std::size_t i = 0; i < h.rows(); ++i) {
      double want = 0.0;
      for (std::size_t j = 0; j < h.cols(); ++j) want += h(i, j) * static_cast<double>(cc[j]);
      CHECK(fp.x_acc()[i] == doctest::Approx(want));
    }
    for (std::size_t j = 0; j < h.cols(); ++j) {
      double want = 0.0;
      for (std::size_t i = 0; i < h.rows(); ++i) want += h(i, j) * static_cast<double>(rc[i]);
      CHECK(fp.y_acc()[j] == doctest::Approx(want));
    }
    CHECK(fp.best_lower() <= 1.0 / 3 + 1e-12);
    CHECK(fp.best_upper() >= 1.0 / 3 - 1e-12);
  }
}

TEST_CASE("fictitious play reports an exhausted budget without throwing") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> entries(64);
  for (auto& e : entries) e = u(rng);
  const PayoffMatrix h(8, 8, entries);
  const auto s = fp_solve(h, {1e-12, 10});
  CHECK_FALSE(s.converged);
  CHECK(s.iterations == 10);
  CHECK(s.value_lower <= s.value_upper);
  CHECK_THROWS_AS(fp_solve(h, {0.0, 10}), InvalidArgument);
  CHECK_THROWS_AS(fp_solve(h, {1e-3, 0}), InvalidArgument);
}

TEST_CASE("fictitious play handles negative payoffs") {
  // Rock-paper-scissors, value 0.
  const PayoffMatrix h({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  const auto s = fp_solve(h, {1e-2, 1000000});
  CHECK(s.converged);
  CHECK(s.value_lower <= 1e-12);
  CHECK(s.value_upper >= -1e-12);
}

TEST_CASE("exact oracle examples") {
  const auto ex3 = lp_oracle(build_payoff(ex3_components(), testing::ex3_rates()));
  CHECK(ex3.value == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(ex3.y[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(ex3.y[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));

  const auto one = lp_oracle(PayoffMatrix(1, 1, {0.25}));
  CHECK(one.value == 0.25);
  CHECK(one.y == std::vector<double>{1.0});

  const auto id = lp_oracle(PayoffMatrix({{1.0, 0.0}, {0.0, 1.0}}));
  CHECK(id.value == doctest::Approx(0.5));
  CHECK(id.y[0] == doctest::Approx(0.5));
  CHECK(id.y[1] == doctest::Approx(0.5));
}

TEST_CASE("exact oracle picks the lexicographically smallest optimum") {
  // Two identical columns: every split is optimal; smallest y puts all mass
  // on the second column.
  const auto s = lp_oracle(PayoffMatrix({{1.0, 1.0}}));
  CHECK(s.value == doctest::Approx(1.0));
  CHECK(s.y[0] == doctest::Approx(0.0));
  CHECK(s.y[1] == doctest::Approx(1.0));
}

TEST_CASE("exact oracle size limit") {
  std::vector<double> row(13, 1.0);
  CHECK_THROWS_AS(lp_oracle(PayoffMatrix({row})), UnsupportedSize);
  CHECK_NOTHROW(lp_oracle(PayoffMatrix({row}), 13));
}

TEST_CASE("supported rates and bottleneck") {
  const auto h = build_payoff(ex3_components(), testing::ex3_rates());
  const std::vector<double> opt{1.0 / 3, 2.0 / 3};
  const auto r = supported_rates(h, opt);
  for (double v : r) CHECK(v == doctest::Approx(1.0 / 3));
  const auto col1 = supported_rates(h, std::vector<double>{0.0, 1.0});
  CHECK(col1 == std::vector<double>{h(0, 1), h(1, 1), h(2, 1)});
  CHECK_THROWS_AS(supported_rates(h, std::vector<double>{1.0}), InvalidArgument);

  CHECK(bottleneck(h, std::vector<double>{1.0, 0.0}) == 2);
  CHECK(bottleneck(h, opt) == 0);
  CHECK(bottleneck(PayoffMatrix(1, 1, {0.5}), std::vector<double>{1.0}) == 0);
}

TEST_CASE("optimal strategy satisfies the min-max characterisation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto game = random_game(rng, 7, 4);
    const auto exact = lp_oracle(game.h);
    const auto hy = supported_rates(game.h, exact.y);
    // Slots needed for every link under y, scaled to the optimum.
    double slots = 0.0;
    for (std::size_t i = 0; i < hy.size(); ++i) {
      slots = std::max(slots, 1.0 / hy[i]);
    }
    CHECK(slots == doctest::Approx(1.0 / exact.value).epsilon(1e-9));
    CHECK(oracle::grid_game_value(game.h, 24) <= exact.value + 1e-9);
  }
}

TEST_CASE("dominated components do not change the value") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto g = oracle::random_graph(n, 0.5, rng);
    const auto rates = oracle::random_rates(n, 1, 9, rng);
    const auto all = enumerate_components(g);
    if (all.size() > 12) continue;
    const double with_all = lp_oracle(build_payoff(all, rates)).value;
    const double maximal = lp_oracle(build_payoff(enumerate_maximal(g), rates)).value;
    CHECK(std::abs(with_all - maximal) <= 1e-9);
  }
}

TEST_CASE("scaling every rate scales the slot count") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto game = random_game(rng, 8, 8);
    const auto base = lp_oracle(game.h);
    for (int c : {2, 3, 7}) {
      RateVector scaled = game.rates;
      for (auto& r : scaled) r *= c;
      const auto s = lp_oracle(build_payoff(game.components, scaled));
      CHECK(1.0 / s.value == doctest::Approx(c / base.value).epsilon(1e-9));
      // The base optimum stays optimal for the scaled game.
      const auto hy = supported_rates(build_payoff(game.components, scaled), base.y);
      CHECK(*std::min_element(hy.begin(), hy.end()) == doctest::Approx(s.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("fictitious play brackets the exact value and converges") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto game = random_game(rng, 10, 10);
    const double exact = lp_oracle(game.h).value;
    FictitiousPlay fp(game.h);
    double running_gap = std::numeric_limits<double>::infinity();
    while (fp.iterations() < 1000000 && fp.best_gap() > 1e-3) {
      fp.step();
      CHECK(fp.value_lower() <= exact + 1e-12);
      CHECK(fp.value_upper() >= exact - 1e-12);
      CHECK(fp.best_gap() <= running_gap);
      running_gap = fp.best_gap();
    }
    CHECK(fp.best_gap() <= 1e-3);
  }
}

TEST_CASE("schedule extraction") {
  const auto g = testing::ex3_graph();
  const auto rates = testing::ex3_rates();

  SUBCASE("exact optimum gives three slots") {
    const auto s = extract_schedule(ex3_components(), rates, std::vector<double>{1.0 / 3, 2.0 / 3},
                                    1.0 / 3, g);
    CHECK(s.slots == std::vector<std::size_t>{0, 1, 1});
    CHECK(s.served == std::vector<long long>{3, 1, 2});
    CHECK(verify_schedule(s, g, rates));
  }
  SUBCASE("a single component is forced") {
    const ConflictGraph free2(2);
    const std::vector<Component> one{{{0, 1}}};
    const RateVector r{7, 3};
    const auto s = extract_schedule(one, r, std::vector<double>{1.0}, 1.0 / 7, free2);
    CHECK(s.length() == 7);
    CHECK(verify_schedule(s, free2, r));
  }
  SUBCASE("repair covers links the strategy ignores") {
    const auto s = extract_schedule(ex3_components(), rates, std::vector<double>{1.0, 0.0},
                                    1.0 / 3, g);
    CHECK(verify_schedule(s, g, rates));
    CHECK(s.slot_counts() == std::vector<long long>{1, 2});
  }
  SUBCASE("nonpositive value") {
    CHECK_THROWS_AS(extract_schedule(ex3_components(), rates, std::vector<double>{0.5, 0.5}, 0.0, g),
                    InvalidArgument);
  }
}

TEST_CASE("extracted schedules are feasible and never beat the fractional bound") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const auto game = random_game(rng, 10, 12);
    const auto exact = lp_oracle(game.h);
    const auto s = extract_schedule(game.components, game.rates, exact.y, exact.value, game.graph);
    CHECK(verify_schedule(s, game.graph, game.rates));
    CHECK(static_cast<double>(s.length()) >= std::ceil(1.0 / exact.value - 1e-9));

    const auto fp = fp_solve(game.h);
    const auto sf = extract_schedule(game.components, game.rates, fp.y, fp.value_lower, game.graph);
    CHECK(verify_schedule(sf, game.graph, game.rates));

    // Random (possibly poor) strategies still yield feasible plans.
    std::vector<double> y(game.components.size());
    for (auto& v : y) v = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double total = std::accumulate(y.begin(), y.end(), 0.0);
    for (auto& v : y) v /= total;
    CHECK(verify_schedule(extract_schedule(game.components, game.rates, y, exact.value, game.graph),
                          game.graph, game.rates));
  }
}

TEST_CASE("schedule verification reports violations") {
  const auto g = testing::ex3_graph();
  const auto rates = testing::ex3_rates();

  Schedule clash;
  clash.components = {{{1, 2}}, {{0}}};
  clash.slots = {1, 1, 1, 0, 0};
  const auto bad = verify_schedule(clash, g, rates);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation.find("slot 3") != std::string::npos);
  CHECK(bad.violation.find("1 and 2") != std::string::npos);

  Schedule shortfall;
  shortfall.components = ex3_components();
  shortfall.slots = {0, 1};
  const auto under = verify_schedule(shortfall, g, rates);
  CHECK_FALSE(under.ok);
  CHECK(under.violation.find("link 0") != std::string::npos);
}

TEST_CASE("a hard coloring is a valid slot plan") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const auto g = oracle::random_graph(n, 0.3, rng);
    const auto rates = oracle::random_rates(n, 1, 9, rng);
    const auto c = greedy_color(g);
    const auto s = coloring_schedule(c.classes, rates);
    CHECK(verify_schedule(s, g, rates));
    CHECK(static_cast<long long>(s.length()) == coloring_slots(c, rates));
  }
}

}  // TEST_SUITE
