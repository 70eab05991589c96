// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace netevo {

struct KnapsackInstance {
  std::vector<double> values;
  std::vector<double> weights;
  double capacity = 0.0;

  int item_count() const { return static_cast<int>(values.size()); }

  /// Throws std::invalid_argument unless values/weights have equal length,
  /// every entry is finite and non-negative, and capacity >= 0 (+infinity
  /// is accepted and treated as unbounded by the solvers).
  void validate() const;
};

struct KnapsackSolution {
  std::vector<uint8_t> selection;  // x_i in {0,1}
  double total_value = 0.0;
  double total_weight = 0.0;
  bool optimal = false;
};

struct DpOptions {
  /// Weights are multiplied by this factor and must then be integral
  /// (within 1e-9); lets real-valued weights ride the integer DP.
  double weight_scale = 1.0;
};

/// Exact solver: dynamic programming over the weight dimension, O(r*C)
/// time with a rolling value array plus an r*C decision table for
/// selection reconstruction. Effective capacity is clamped to the total
/// scaled weight, so oversized or infinite capacities cost nothing.
///
/// All solvers share one tie-break so results are deterministic: maximum
/// total value, then minimum total weight, then the lexicographically
/// smallest selection bit vector. Zero-weight positive-value items are
/// therefore always selected.
KnapsackSolution solve_dp(const KnapsackInstance& inst, const DpOptions& opt = {});

/// Exhaustive 2^r oracle with the same tie-break. Guard: r <= 25.
KnapsackSolution solve_bruteforce(const KnapsackInstance& inst);

/// Baseline: sorts by value/weight ratio (zero-weight items first) and
/// fills greedily. Never optimal-flagged.
KnapsackSolution solve_greedy(const KnapsackInstance& inst);

/// The shared third-stage tie-break: true when `a` precedes `b`
/// lexicographically as a bit vector (index 0 compared first, 0 < 1).
bool selection_less_lex(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b);

}  // namespace netevo
