// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netevo/graph.hpp"
#include "netevo/knapsack.hpp"

namespace netevo {

/// Ternary per-node advice: -1 repress, +1 promote, 0 indifferent.
class OracleAdvice {
 public:
  OracleAdvice() = default;
  explicit OracleAdvice(std::vector<int8_t> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int8_t operator[](int node) const { return entries_[static_cast<size_t>(node)]; }
  const std::vector<int8_t>& entries() const { return entries_; }

  /// Number of nonzero entries.
  int pressure() const;

  OracleAdvice negated() const;

 private:
  std::vector<int8_t> entries_;
};

/// A network evolution problem: pick a 0/1 state per node maximizing
/// total benefit subject to total damage <= tolerance.
struct NEInstance {
  SignedDigraph graph;
  OracleAdvice advice;
  double tolerance = 0.0;
};

struct BenefitDamage {
  std::vector<double> benefits;
  std::vector<double> damages;
};

struct NESolution {
  std::vector<uint8_t> selection;
  double total_benefit = 0.0;
  double total_damage = 0.0;
};

/// Per-node benefit and damage. An outgoing edge j->k with nonzero advice
/// on k contributes |weight| to j's benefit when the edge sign matches
/// a_k, to j's damage when it opposes it; edges into indifferent nodes
/// contribute to neither. Runs in O(sum of in-degrees of advised nodes),
/// which is what keeps dense networks affordable at low pressure.
BenefitDamage compute_benefit_damage(const SignedDigraph& g, const OracleAdvice& advice);

enum class ReductionMode {
  /// Divides the repressing entries by floor(r/2) like the promoting
  /// ones, although r - floor(r/2) of them exist per row; damages come
  /// out scaled by ceil(r/2)/floor(r/2), so the round trip is exact only
  /// for even r.
  legacy,
  /// Divides the repressing entries by r - floor(r/2); exact for all r.
  corrected,
};

/// Embeds a knapsack instance into a network evolution instance over a
/// dense r x r interaction matrix (self-loops included): row j carries
/// +v_j split over the first floor(r/2) columns and -w_j split over the
/// rest, advice is all +1 and tolerance is the capacity. Requires r >= 2
/// and positive integer values and weights.
NEInstance kp_to_ne(const KnapsackInstance& kp, ReductionMode mode = ReductionMode::corrected);

/// The reverse mapping used by the simulation: values = benefits,
/// weights = damages, capacity = tolerance. Item i corresponds to node i.
KnapsackInstance ne_to_kp(const NEInstance& ne);

using KnapsackSolver = std::function<KnapsackSolution(const KnapsackInstance&)>;

/// Reduces to knapsack, solves, and maps the selection back to nodes.
/// Nodes with zero benefit are dropped from the solver instance (no
/// canonical optimum ever selects them). Damages are scaled by
/// weight_scale and rounded half-up to integers before solving; the
/// tolerance is floored likewise, which is exact whenever the scaled
/// damages are integral. The default solver is the exact DP.
NESolution solve_ne(const SignedDigraph& g, const OracleAdvice& advice, double tolerance,
                    const KnapsackSolver& solver = {}, double weight_scale = 1.0);
NESolution solve_ne(const NEInstance& ne, const KnapsackSolver& solver = {},
                    double weight_scale = 1.0);

}  // namespace netevo
