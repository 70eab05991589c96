// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/sim.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace netevo {

OracleAdvice sample_advice(const SignedDigraph& g, int pressure, Rng& rng) {
  const int n = g.node_count();
  if (pressure < 1 || pressure > n) {
    throw std::invalid_argument("sample_advice: pressure must be in [1, node count]");
  }
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int8_t> entries(static_cast<size_t>(n), 0);
  for (int i = 0; i < pressure; ++i) {
    const int j = i + static_cast<int>(rng.bounded(static_cast<uint64_t>(n - i)));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    entries[static_cast<size_t>(pool[static_cast<size_t>(i)])] = rng.coin() ? 1 : -1;
  }
  return OracleAdvice(std::move(entries));
}

std::pair<double, double> run_round_with_advice(const SignedDigraph& g,
                                                const OracleAdvice& advice, double tolerance) {
  const NESolution sol = solve_ne(g, advice, tolerance);
  return {sol.total_benefit, sol.total_damage};
}

std::pair<double, double> run_round(const SignedDigraph& g, int pressure, double tolerance,
                                    Rng& rng) {
  return run_round_with_advice(g, sample_advice(g, pressure, rng), tolerance);
}

SweepResult run_sweep(const SignedDigraph& g, const SweepConfig& cfg,
                      std::string network_name) {
  if (cfg.rounds < 1) throw std::invalid_argument("run_sweep: rounds must be >= 1");
  if (cfg.worker_count < 1) throw std::invalid_argument("run_sweep: worker_count must be >= 1");
  for (int p : cfg.pressures) {
    if (p < 1) throw std::invalid_argument("run_sweep: pressures must be >= 1");
  }
  for (double t : cfg.tolerances) {
    if (std::isnan(t) || t < 0.0) {
      throw std::invalid_argument("run_sweep: tolerances must be non-negative");
    }
  }

  SweepResult result;
  result.network_name = std::move(network_name);
  result.node_count = g.node_count();
  result.master_seed = cfg.master_seed;

  struct Cell {
    int pressure;
    double tolerance;
    std::vector<std::pair<double, double>> rounds;
  };
  std::vector<Cell> cells;
  for (int p : cfg.pressures) {
    for (double t : cfg.tolerances) {
      if (p > g.node_count()) {
        result.warnings.push_back("skipped cell p=" + std::to_string(p) +
                                  " t=" + std::to_string(t) + ": pressure exceeds node count " +
                                  std::to_string(g.node_count()));
        continue;
      }
      cells.push_back({p, t, std::vector<std::pair<double, double>>(
                                 static_cast<size_t>(cfg.rounds))});
    }
  }

  // Every round is an independent task with its own derived stream, and
  // results land in a preassigned slot, so scheduling cannot perturb the
  // aggregate.
  const size_t total_tasks = cells.size() * static_cast<size_t>(cfg.rounds);
  std::atomic<size_t> next_task{0};
  auto worker = [&]() {
    for (;;) {
      const size_t task = next_task.fetch_add(1);
      if (task >= total_tasks) return;
      Cell& cell = cells[task / static_cast<size_t>(cfg.rounds)];
      const size_t round = task % static_cast<size_t>(cfg.rounds);
      Rng rng(derive_seed(cfg.master_seed,
                          {static_cast<uint64_t>(cell.pressure),
                           std::bit_cast<uint64_t>(cell.tolerance), round}));
      cell.rounds[round] = run_round(g, cell.pressure, cell.tolerance, rng);
    }
  };

  const int workers = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(cfg.worker_count), std::max<size_t>(total_tasks, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  for (const Cell& cell : cells) {
    double value_sum = 0.0;
    double weight_sum = 0.0;
    for (const auto& [v, w] : cell.rounds) {  // fixed round order
      value_sum += v;
      weight_sum += w;
    }
    CellResult cr;
    cr.pressure = cell.pressure;
    cr.tolerance = cell.tolerance;
    cr.mean_value = value_sum / static_cast<double>(cfg.rounds);
    cr.mean_weight = weight_sum / static_cast<double>(cfg.rounds);
    cr.ratio = cr.mean_weight > 0.0 ? cr.mean_value / cr.mean_weight : cr.mean_value;
    cr.rounds_completed = cfg.rounds;
    result.cells.push_back(cr);
  }
  return result;
}

namespace {

double relative_difference(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

double convergence_check(const SignedDigraph& g, int pressure, double tolerance, int rounds_a,
                         int rounds_b, uint64_t seed_a, uint64_t seed_b, int worker_count) {
  SweepConfig cfg;
  cfg.pressures = {pressure};
  cfg.tolerances = {tolerance};
  cfg.worker_count = worker_count;

  cfg.rounds = rounds_a;
  cfg.master_seed = seed_a;
  const SweepResult a = run_sweep(g, cfg);

  cfg.rounds = rounds_b;
  cfg.master_seed = seed_b;
  const SweepResult b = run_sweep(g, cfg);

  if (a.cells.empty() || b.cells.empty()) {
    throw std::invalid_argument("convergence_check: pressure exceeds node count");
  }
  return std::max(relative_difference(a.cells[0].mean_value, b.cells[0].mean_value),
                  relative_difference(a.cells[0].mean_weight, b.cells[0].mean_weight));
}

}  // namespace netevo
