// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/ne_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "netevo/knapsack.hpp"

namespace netevo {

OracleAdvice::OracleAdvice(std::vector<int8_t> entries) : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < -1 || entries_[i] > 1) {
      throw std::invalid_argument("advice entry " + std::to_string(i) +
                                  " must be -1, 0 or +1");
    }
  }
}

int OracleAdvice::pressure() const {
  int count = 0;
  for (int8_t a : entries_) count += (a != 0);
  return count;
}

OracleAdvice OracleAdvice::negated() const {
  std::vector<int8_t> flipped(entries_);
  for (int8_t& a : flipped) a = static_cast<int8_t>(-a);
  return OracleAdvice(std::move(flipped));
}

BenefitDamage compute_benefit_damage(const SignedDigraph& g, const OracleAdvice& advice) {
  const int n = g.node_count();
  if (advice.size() != n) {
    throw std::invalid_argument("advice length does not match node count");
  }
  BenefitDamage bd;
  bd.benefits.assign(static_cast<size_t>(n), 0.0);
  bd.damages.assign(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    const int8_t ak = advice[k];
    if (ak == 0) continue;
    for (int ei : g.in_edges(k)) {
      const Edge& e = g.edge(ei);
      const bool agrees = (e.weight > 0.0) == (ak > 0);
      if (agrees) {
        bd.benefits[static_cast<size_t>(e.source)] += std::abs(e.weight);
      } else {
        bd.damages[static_cast<size_t>(e.source)] += std::abs(e.weight);
      }
    }
  }
  return bd;
}

namespace {

// Absorbs decimal representation error before flooring a scaled tolerance.
constexpr double kIntegralGuard = 1e-9;

void require_positive_integer(double x, const char* what, size_t index) {
  if (!(x > 0.0) || std::floor(x) != x || !std::isfinite(x)) {
    throw std::invalid_argument(std::string("kp_to_ne: ") + what + " " + std::to_string(index) +
                                " must be a positive integer");
  }
}

}  // namespace

NEInstance kp_to_ne(const KnapsackInstance& kp, ReductionMode mode) {
  kp.validate();
  const int r = kp.item_count();
  if (r < 2) {
    throw std::invalid_argument("kp_to_ne: need at least 2 items");
  }
  for (size_t i = 0; i < kp.values.size(); ++i) {
    require_positive_integer(kp.values[i], "value", i);
    require_positive_integer(kp.weights[i], "weight", i);
  }

  const int half = r / 2;
  const int negative_divisor = (mode == ReductionMode::corrected) ? (r - half) : half;

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(r) * r);
  for (int j = 0; j < r; ++j) {
    const double promote = kp.values[static_cast<size_t>(j)] / static_cast<double>(half);
    const double repress = -kp.weights[static_cast<size_t>(j)] / static_cast<double>(negative_divisor);
    for (int k = 0; k < r; ++k) {
      edges.push_back({j, k, k < half ? promote : repress});
    }
  }

  NEInstance ne;
  ne.graph = SignedDigraph(r, std::move(edges));
  ne.advice = OracleAdvice(std::vector<int8_t>(static_cast<size_t>(r), 1));
  ne.tolerance = kp.capacity;
  return ne;
}

KnapsackInstance ne_to_kp(const NEInstance& ne) {
  BenefitDamage bd = compute_benefit_damage(ne.graph, ne.advice);
  KnapsackInstance kp;
  kp.values = std::move(bd.benefits);
  kp.weights = std::move(bd.damages);
  kp.capacity = ne.tolerance;
  return kp;
}

NESolution solve_ne(const SignedDigraph& g, const OracleAdvice& advice, double tolerance,
                    const KnapsackSolver& solver, double weight_scale) {
  if (std::isnan(tolerance) || tolerance < 0.0) {
    throw std::invalid_argument("solve_ne: tolerance must be non-negative");
  }
  if (!std::isfinite(weight_scale) || weight_scale <= 0.0) {
    throw std::invalid_argument("solve_ne: weight_scale must be positive and finite");
  }
  const BenefitDamage bd = compute_benefit_damage(g, advice);
  const int n = g.node_count();

  // Only nodes with positive benefit can appear in a canonical optimum;
  // everything else stays deselected, which also keeps the DP small when
  // the advice touches few nodes.
  std::vector<int> node_of;
  KnapsackInstance kp;
  double scaled_weight_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    if (bd.benefits[static_cast<size_t>(j)] <= 0.0) continue;
    node_of.push_back(j);
    kp.values.push_back(bd.benefits[static_cast<size_t>(j)]);
    const double scaled = std::floor(bd.damages[static_cast<size_t>(j)] * weight_scale + 0.5);
    kp.weights.push_back(scaled);
    scaled_weight_sum += scaled;
  }
  const double scaled_tolerance = tolerance * weight_scale;
  kp.capacity = scaled_tolerance >= scaled_weight_sum
                    ? scaled_weight_sum
                    : std::floor(scaled_tolerance + kIntegralGuard);

  const KnapsackSolution ks = solver ? solver(kp) : solve_dp(kp);

  NESolution sol;
  sol.selection.assign(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < node_of.size(); ++i) {
    if (ks.selection[i]) sol.selection[static_cast<size_t>(node_of[i])] = 1;
  }
  for (int j = 0; j < n; ++j) {
    if (sol.selection[static_cast<size_t>(j)]) {
      sol.total_benefit += bd.benefits[static_cast<size_t>(j)];
      sol.total_damage += bd.damages[static_cast<size_t>(j)];
    }
  }
  return sol;
}

NESolution solve_ne(const NEInstance& ne, const KnapsackSolver& solver, double weight_scale) {
  return solve_ne(ne.graph, ne.advice, ne.tolerance, solver, weight_scale);
}

}  // namespace netevo
