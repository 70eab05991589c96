// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "netevo/knapsack.hpp"
#include "netevo/ne_model.hpp"
#include "netevo/netgen.hpp"
#include "netevo/rng.hpp"
#include "netevo/sim.hpp"

namespace {

using namespace netevo;

KnapsackInstance random_kp(int items, uint64_t seed) {
  Rng rng(seed);
  KnapsackInstance kp;
  for (int i = 0; i < items; ++i) {
    kp.values.push_back(1.0 + static_cast<double>(rng.bounded(100)));
    kp.weights.push_back(1.0 + static_cast<double>(rng.bounded(50)));
  }
  kp.capacity = 10.0 * items;
  return kp;
}

void BM_SolveDp(benchmark::State& state) {
  const KnapsackInstance kp = random_kp(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dp(kp));
  }
}
BENCHMARK(BM_SolveDp)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveBruteforce(benchmark::State& state) {
  const KnapsackInstance kp = random_kp(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bruteforce(kp));
  }
}
BENCHMARK(BM_SolveBruteforce)->Arg(12)->Arg(18);

void BM_Generate(benchmark::State& state) {
  const GenSpec spec{GenModel::barabasi_albert, static_cast<int>(state.range(0)), 3.0, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(spec));
  }
}
BENCHMARK(BM_Generate)->Arg(500)->Arg(2000);

void BM_RunRound(benchmark::State& state) {
  const SignedDigraph g = generate({GenModel::barabasi_albert, 500, 3.0, 7});
  const int pressure = static_cast<int>(state.range(0));
  Rng rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_round(g, pressure, 5.0, rng));
  }
}
BENCHMARK(BM_RunRound)->Arg(5)->Arg(125);

void BM_RunSweep(benchmark::State& state) {
  const SignedDigraph g = generate({GenModel::barabasi_albert, 500, 3.0, 7});
  SweepConfig cfg;
  cfg.pressures = {5, 125};
  cfg.tolerances = {5.0, 125.0};
  cfg.rounds = 100;
  cfg.master_seed = 11;
  cfg.worker_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(g, cfg, "ba"));
  }
}
BENCHMARK(BM_RunSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
