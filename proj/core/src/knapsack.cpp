// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace netevo {

namespace {

constexpr double kIntegralityTol = 1e-9;

// Decision-table budget for the DP: r * (capacity + 1) bytes.
constexpr uint64_t kMaxDpCells = 1ull << 28;

bool nearly_integral(double x, double* rounded) {
  const double r = std::round(x);
  if (std::abs(x - r) > kIntegralityTol * std::max(1.0, std::abs(x))) return false;
  *rounded = r;
  return true;
}

double selected_sum(const std::vector<double>& entries, const std::vector<uint8_t>& selection) {
  double total = 0.0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (selection[i]) total += entries[i];
  }
  return total;
}

}  // namespace

void KnapsackInstance::validate() const {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("knapsack: values and weights differ in length");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw std::invalid_argument("knapsack: value " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw std::invalid_argument("knapsack: weight " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
  }
  if (std::isnan(capacity) || capacity < 0.0) {
    throw std::invalid_argument("knapsack: capacity must be non-negative");
  }
}

bool selection_less_lex(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

KnapsackSolution solve_dp(const KnapsackInstance& inst, const DpOptions& opt) {
  inst.validate();
  if (!std::isfinite(opt.weight_scale) || opt.weight_scale <= 0.0) {
    throw std::invalid_argument("knapsack: weight_scale must be positive and finite");
  }
  const int r = inst.item_count();

  std::vector<int64_t> w(static_cast<size_t>(r));
  int64_t total_weight = 0;
  for (int i = 0; i < r; ++i) {
    double rounded;
    if (!nearly_integral(inst.weights[static_cast<size_t>(i)] * opt.weight_scale, &rounded)) {
      throw std::invalid_argument("knapsack: weight " + std::to_string(i) +
                                  " is not integral after scaling");
    }
    w[static_cast<size_t>(i)] = static_cast<int64_t>(rounded);
    total_weight += w[static_cast<size_t>(i)];
  }

  // Capacity beyond the total weight is slack; clamp before demanding
  // integrality so infinite tolerances work.
  const double scaled_capacity = inst.capacity * opt.weight_scale;
  int64_t cap;
  if (scaled_capacity >= static_cast<double>(total_weight)) {
    cap = total_weight;
  } else {
    double rounded;
    if (!nearly_integral(scaled_capacity, &rounded)) {
      throw std::invalid_argument("knapsack: capacity is not integral after scaling");
    }
    cap = static_cast<int64_t>(rounded);
  }

  const uint64_t cells = static_cast<uint64_t>(cap) + 1;
  if (r > 0 && cells * static_cast<uint64_t>(r) > kMaxDpCells) {
    throw std::invalid_argument("knapsack: scaled capacity overflows the DP table budget");
  }

  // Suffix DP: state (i, c) holds the best (max value, min weight) over
  // items i..r-1 at remaining capacity c. Preferring "skip" on exact ties
  // during the sweep makes the reconstruction lexicographically smallest.
  std::vector<double> val(cells, 0.0), next_val(cells);
  std::vector<int64_t> wt(cells, 0), next_wt(cells);
  std::vector<uint8_t> take(static_cast<size_t>(r) * cells, 0);

  for (int i = r - 1; i >= 0; --i) {
    const double vi = inst.values[static_cast<size_t>(i)];
    const int64_t wi = w[static_cast<size_t>(i)];
    uint8_t* take_row = take.data() + static_cast<size_t>(i) * cells;
    for (int64_t c = 0; c <= cap; ++c) {
      double best_v = val[static_cast<size_t>(c)];
      int64_t best_w = wt[static_cast<size_t>(c)];
      uint8_t taken = 0;
      if (wi <= c) {
        const double tv = val[static_cast<size_t>(c - wi)] + vi;
        const int64_t tw = wt[static_cast<size_t>(c - wi)] + wi;
        if (tv > best_v || (tv == best_v && tw < best_w)) {
          best_v = tv;
          best_w = tw;
          taken = 1;
        }
      }
      next_val[static_cast<size_t>(c)] = best_v;
      next_wt[static_cast<size_t>(c)] = best_w;
      take_row[static_cast<size_t>(c)] = taken;
    }
    val.swap(next_val);
    wt.swap(next_wt);
  }

  KnapsackSolution sol;
  sol.selection.assign(static_cast<size_t>(r), 0);
  int64_t c = cap;
  for (int i = 0; i < r; ++i) {
    if (take[static_cast<size_t>(i) * cells + static_cast<size_t>(c)]) {
      sol.selection[static_cast<size_t>(i)] = 1;
      c -= w[static_cast<size_t>(i)];
    }
  }
  sol.total_value = selected_sum(inst.values, sol.selection);
  sol.total_weight = selected_sum(inst.weights, sol.selection);
  sol.optimal = true;
  return sol;
}

KnapsackSolution solve_bruteforce(const KnapsackInstance& inst) {
  inst.validate();
  const int r = inst.item_count();
  if (r > 25) {
    throw std::invalid_argument("knapsack: too many items for exhaustive search (r > 25)");
  }

  // Lexicographic order on selections, bit i == item i: the first
  // differing item decides, unselected wins.
  const auto lex_less = [](uint32_t a, uint32_t b) {
    const uint32_t diff = a ^ b;
    const int i = std::countr_zero(diff);
    return ((a >> i) & 1u) == 0;
  };

  uint32_t best_mask = 0;
  double best_value = 0.0;
  double best_weight = 0.0;  // mask 0 is always feasible (capacity >= 0)
  for (uint32_t mask = 1; mask < (1u << r); ++mask) {
    double weight = 0.0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) weight += inst.weights[static_cast<size_t>(i)];
    }
    if (weight > inst.capacity) continue;
    double value = 0.0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) value += inst.values[static_cast<size_t>(i)];
    }
    if (value > best_value || (value == best_value && weight < best_weight) ||
        (value == best_value && weight == best_weight && lex_less(mask, best_mask))) {
      best_mask = mask;
      best_value = value;
      best_weight = weight;
    }
  }

  KnapsackSolution sol;
  sol.selection.assign(static_cast<size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    if (best_mask & (1u << i)) sol.selection[static_cast<size_t>(i)] = 1;
  }
  sol.total_value = best_value;
  sol.total_weight = best_weight;
  sol.optimal = true;
  return sol;
}

KnapsackSolution solve_greedy(const KnapsackInstance& inst) {
  inst.validate();
  const int r = inst.item_count();

  std::vector<int> order(static_cast<size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double wa = inst.weights[static_cast<size_t>(a)];
    const double wb = inst.weights[static_cast<size_t>(b)];
    if ((wa == 0.0) != (wb == 0.0)) return wa == 0.0;
    if (wa == 0.0) return false;  // both free: keep index order
    return inst.values[static_cast<size_t>(a)] / wa > inst.values[static_cast<size_t>(b)] / wb;
  });

  KnapsackSolution sol;
  sol.selection.assign(static_cast<size_t>(r), 0);
  double weight = 0.0;
  for (int i : order) {
    const double wi = inst.weights[static_cast<size_t>(i)];
    if (weight + wi <= inst.capacity) {
      sol.selection[static_cast<size_t>(i)] = 1;
      weight += wi;
      sol.total_value += inst.values[static_cast<size_t>(i)];
    }
  }
  sol.total_weight = weight;
  sol.optimal = false;
  return sol;
}

}  // namespace netevo
