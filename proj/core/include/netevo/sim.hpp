// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netevo/graph.hpp"
#include "netevo/ne_model.hpp"
#include "netevo/rng.hpp"

namespace netevo {

struct SweepConfig {
  std::vector<int> pressures;
  std::vector<double> tolerances;
  int rounds = 1;
  uint64_t master_seed = 0;
  int worker_count = 1;
};

struct CellResult {
  int pressure = 0;
  double tolerance = 0.0;
  double mean_value = 0.0;
  double mean_weight = 0.0;
  double ratio = 0.0;  // mean_value / mean_weight, or mean_value when mean_weight == 0
  int rounds_completed = 0;
};

struct SweepResult {
  std::string network_name;
  int node_count = 0;
  uint64_t master_seed = 0;
  std::string solver_id = "dp";
  double weight_scale = 1.0;
  std::vector<CellResult> cells;      // pressure-major, tolerance-minor
  std::vector<std::string> warnings;  // e.g. skipped cells with p > n
};

/// Draws exactly `pressure` distinct nodes uniformly without replacement
/// and gives each a fair-coin sign; all other entries are 0.
OracleAdvice sample_advice(const SignedDigraph& g, int pressure, Rng& rng);

/// One simulation round: sample advice, solve the instance exactly,
/// return (total value, total weight) of the solution.
std::pair<double, double> run_round(const SignedDigraph& g, int pressure, double tolerance,
                                    Rng& rng);

/// Same, with the advice supplied by the caller.
std::pair<double, double> run_round_with_advice(const SignedDigraph& g, const OracleAdvice& advice,
                                                double tolerance);

/// Runs cfg.rounds independent rounds per (pressure, tolerance) cell and
/// aggregates means. Every round's stream is derived from
/// (master_seed, p, t, round_index), and per-round results are reduced in
/// round order, so the result is bit-identical for a fixed master_seed
/// regardless of worker_count. Cells with p > node count are skipped with
/// a recorded warning.
SweepResult run_sweep(const SignedDigraph& g, const SweepConfig& cfg,
                      std::string network_name = "");

/// Runs one cell at two round counts (independent streams for the two
/// seeds) and returns the larger relative difference of mean value and
/// mean weight.
double convergence_check(const SignedDigraph& g, int pressure, double tolerance, int rounds_a,
                         int rounds_b, uint64_t seed_a, uint64_t seed_b, int worker_count = 1);

}  // namespace netevo
