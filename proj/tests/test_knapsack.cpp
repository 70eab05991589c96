// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <limits>
#include <stdexcept>
#include <vector>

#include "netevo/knapsack.hpp"
#include "netevo/rng.hpp"

using namespace netevo;

namespace {

KnapsackInstance random_instance(Rng& rng, int max_items, int max_weight, int max_capacity) {
  KnapsackInstance inst;
  const int r = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(max_items)));
  for (int i = 0; i < r; ++i) {
    inst.values.push_back(static_cast<double>(rng.bounded(101)));
    inst.weights.push_back(static_cast<double>(rng.bounded(static_cast<uint64_t>(max_weight + 1))));
  }
  inst.capacity = static_cast<double>(rng.bounded(static_cast<uint64_t>(max_capacity + 1)));
  return inst;
}

}  // namespace

TEST_CASE("dp picks the hand-checked optimum") {
  const KnapsackInstance inst{{6, 10, 12}, {1, 2, 3}, 5};
  const KnapsackSolution sol = solve_dp(inst);
  CHECK(sol.selection == std::vector<uint8_t>{0, 1, 1});
  CHECK(sol.total_value == 22.0);
  CHECK(sol.total_weight == 5.0);
  CHECK(sol.optimal);
}

TEST_CASE("zero-weight items ride along even at zero capacity") {
  const KnapsackSolution sol = solve_dp({{5, 1}, {0, 10}, 0});
  CHECK(sol.selection == std::vector<uint8_t>{1, 0});
  CHECK(sol.total_value == 5.0);
  CHECK(sol.total_weight == 0.0);
}

TEST_CASE("empty instance solves to the empty selection") {
  for (const KnapsackSolution& sol :
       {solve_dp({}), solve_bruteforce({}), solve_greedy({})}) {
    CHECK(sol.selection.empty());
    CHECK(sol.total_value == 0.0);
    CHECK(sol.total_weight == 0.0);
  }
}

TEST_CASE("exhaustive search handles the boundary cases") {
  SUBCASE("item that does not fit stays out") {
    const KnapsackSolution sol = solve_bruteforce({{7}, {3}, 2});
    CHECK(sol.selection == std::vector<uint8_t>{0});
    CHECK(sol.total_value == 0.0);
  }
  SUBCASE("all-zero weights select every valuable item") {
    const KnapsackSolution sol = solve_bruteforce({{1, 0, 2}, {0, 0, 0}, 0});
    CHECK(sol.selection == std::vector<uint8_t>{1, 0, 1});
    CHECK(sol.total_value == 3.0);
  }
  SUBCASE("too many items are rejected") {
    KnapsackInstance big;
    big.values.assign(26, 1.0);
    big.weights.assign(26, 1.0);
    big.capacity = 5;
    CHECK_THROWS_AS(solve_bruteforce(big), std::invalid_argument);
  }
}

TEST_CASE("greedy is a baseline, not an optimum") {
  const KnapsackInstance inst{{6, 10, 12}, {1, 2, 3}, 5};
  const KnapsackSolution sol = solve_greedy(inst);
  CHECK(sol.selection == std::vector<uint8_t>{1, 1, 0});
  CHECK(sol.total_value == 16.0);
  CHECK_FALSE(sol.optimal);

  CHECK(solve_greedy({{3, 9}, {0, 2}, 0}).selection == std::vector<uint8_t>{1, 0});
  CHECK(solve_greedy({{3, 9}, {1, 2}, 0}).total_value == 0.0);
}

TEST_CASE("dp agrees with exhaustive search on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const KnapsackInstance inst = random_instance(rng, 10, 30, 60);
    const KnapsackSolution dp = solve_dp(inst);
    const KnapsackSolution brute = solve_bruteforce(inst);
    REQUIRE(dp.total_value == brute.total_value);
    REQUIRE(dp.total_weight == brute.total_weight);
    REQUIRE(dp.selection == brute.selection);

    const KnapsackSolution greedy = solve_greedy(inst);
    CHECK(greedy.total_value <= dp.total_value);
    CHECK(greedy.total_weight <= inst.capacity);
    CHECK(dp.total_weight <= inst.capacity);
  }
}

TEST_CASE("optimum value is monotone in capacity and item value") {
  Rng rng(77);
  const KnapsackInstance base = random_instance(rng, 12, 20, 25);
  double previous = -1.0;
  for (double cap = 0; cap <= 40; cap += 5) {
    KnapsackInstance inst = base;
    inst.capacity = cap;
    const double value = solve_dp(inst).total_value;
    CHECK(value >= previous);
    previous = value;
  }

  KnapsackInstance boosted = base;
  boosted.values[0] += 13.0;
  CHECK(solve_dp(boosted).total_value >= solve_dp(base).total_value);
}

TEST_CASE("removing an unselected item keeps the optimum") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const KnapsackInstance inst = random_instance(rng, 9, 15, 20);
    const KnapsackSolution sol = solve_dp(inst);
    int unselected = -1;
    for (size_t i = 0; i < sol.selection.size(); ++i) {
      if (!sol.selection[i]) unselected = static_cast<int>(i);
    }
    if (unselected < 0) continue;
    KnapsackInstance reduced = inst;
    reduced.values.erase(reduced.values.begin() + unselected);
    reduced.weights.erase(reduced.weights.begin() + unselected);
    CHECK(solve_dp(reduced).total_value == sol.total_value);
  }
}

TEST_CASE("weight scaling makes fractional weights solvable") {
  const KnapsackInstance inst{{4, 7}, {0.5, 1.5}, 1.5};
  CHECK_THROWS_AS(solve_dp(inst), std::invalid_argument);

  DpOptions opt;
  opt.weight_scale = 2.0;
  const KnapsackSolution sol = solve_dp(inst, opt);
  CHECK(sol.total_value == 7.0);
  CHECK(sol.total_weight == 1.5);
}

TEST_CASE("capacity beyond the total weight is slack, including infinity") {
  const KnapsackInstance inst{{4, 7, 1}, {2, 3, 5}, std::numeric_limits<double>::infinity()};
  const KnapsackSolution sol = solve_dp(inst);
  CHECK(sol.selection == std::vector<uint8_t>{1, 1, 1});
  CHECK(sol.total_value == 12.0);

  KnapsackInstance huge = inst;
  huge.capacity = 1e18;  // would blow the DP table without clamping
  CHECK(solve_dp(huge).total_value == 12.0);
}

TEST_CASE("oversized scaled capacities are rejected, not allocated") {
  KnapsackInstance inst;
  inst.values.assign(30, 1.0);
  inst.weights.assign(30, 1e8);
  inst.capacity = 2.9e9;
  CHECK_THROWS_AS(solve_dp(inst), std::invalid_argument);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(solve_dp({{1}, {1, 2}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_dp({{-1}, {1}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_dp({{1}, {-2}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_dp({{1}, {2}, -3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_dp({{1}, {2}, std::nan("")}), std::invalid_argument);
}

TEST_CASE("lexicographic selection comparison") {
  CHECK(selection_less_lex({0, 1}, {1, 0}));
  CHECK_FALSE(selection_less_lex({1, 0}, {0, 1}));
  CHECK_FALSE(selection_less_lex({0, 1}, {0, 1}));
  CHECK(selection_less_lex({0, 1}, {0, 1, 0}));  // prefix is smaller
}

TEST_CASE("ties resolve to minimal weight, then lexicographic order") {
  // Two optima by value; the lighter one wins.
  const KnapsackSolution lighter = solve_dp({{5, 5}, {3, 2}, 3});
  CHECK(lighter.selection == std::vector<uint8_t>{0, 1});

  // Equal value and weight: the lexicographically smaller bit vector
  // wins, i.e. the tie skips the earlier item.
  const KnapsackSolution lex = solve_dp({{5, 5}, {2, 2}, 2});
  CHECK(lex.selection == std::vector<uint8_t>{0, 1});
  CHECK(solve_bruteforce({{5, 5}, {2, 2}, 2}).selection == std::vector<uint8_t>{0, 1});
}
