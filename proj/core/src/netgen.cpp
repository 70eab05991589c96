// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/netgen.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "netevo/rng.hpp"

namespace netevo {

namespace {

using Skeleton = std::vector<std::pair<int, int>>;

Skeleton complete_skeleton(int n) {
  Skeleton edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

Skeleton erdos_renyi_skeleton(int n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("erdos_renyi: edge probability must be in [0, 1]");
  }
  Skeleton edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.unit() < p) edges.emplace_back(i, j);
    }
  }
  return edges;
}

// Draws `count` distinct targets preferentially: `pool` holds one entry
// per current edge endpoint, so a uniform pick is degree-proportional.
std::vector<int> distinct_preferential(const std::vector<int>& pool, int count, Rng& rng) {
  std::unordered_set<int> picked;
  std::vector<int> targets;
  targets.reserve(static_cast<size_t>(count));
  while (static_cast<int>(targets.size()) < count) {
    const int candidate = pool[rng.bounded(pool.size())];
    if (picked.insert(candidate).second) targets.push_back(candidate);
  }
  return targets;
}

Skeleton barabasi_albert_skeleton(int n, int m, Rng& rng) {
  if (m < 1 || m >= n) {
    throw std::invalid_argument("barabasi_albert: m must satisfy 1 <= m < n");
  }
  Skeleton edges;
  edges.reserve(static_cast<size_t>(n - m) * m);
  std::vector<int> pool;
  pool.reserve(2 * static_cast<size_t>(n - m) * m);

  // The first arrival connects to all m seed nodes; later arrivals attach
  // to m distinct degree-proportional targets.
  std::vector<int> targets(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) targets[static_cast<size_t>(i)] = i;
  for (int v = m; v < n; ++v) {
    for (int t : targets) {
      edges.emplace_back(v, t);
      pool.push_back(v);
      pool.push_back(t);
    }
    if (v + 1 < n) targets = distinct_preferential(pool, m, rng);
  }
  return edges;
}

// Growth with preferential attachment where each arrival brings a
// fractional mean number of edges, tuned so the generated graph hits a
// requested mean neighbor count: attachments per node average
// target_avg_neighbors / 2.
Skeleton scale_free_skeleton(int n, double target_avg_neighbors, Rng& rng) {
  if (!(target_avg_neighbors >= 2.0) || target_avg_neighbors >= static_cast<double>(n)) {
    throw std::invalid_argument("scale_free: target mean neighbor count must be in [2, n)");
  }
  const double attach_mean = target_avg_neighbors / 2.0;
  const int base = static_cast<int>(std::floor(attach_mean));
  const double frac = attach_mean - static_cast<double>(base);

  Skeleton edges;
  std::vector<int> pool;
  edges.emplace_back(0, 1);
  pool.push_back(0);
  pool.push_back(1);
  for (int v = 2; v < n; ++v) {
    int k = base + (rng.unit() < frac ? 1 : 0);
    if (k < 1) k = 1;
    if (k > v) k = v;
    for (int t : distinct_preferential(pool, k, rng)) {
      edges.emplace_back(v, t);
      pool.push_back(v);
      pool.push_back(t);
    }
  }
  return edges;
}

SignedDigraph orient_and_sign(int n, const Skeleton& skeleton, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(skeleton.size());
  for (const auto& [a, b] : skeleton) {
    const bool forward = rng.coin();
    const double sign = rng.coin() ? 1.0 : -1.0;
    edges.push_back(forward ? Edge{a, b, sign} : Edge{b, a, sign});
  }
  return SignedDigraph(n, std::move(edges));
}

}  // namespace

SignedDigraph generate(const GenSpec& spec) {
  if (spec.nodes < 2) {
    throw std::invalid_argument("generate: node count must be >= 2");
  }
  Rng rng(derive_seed(spec.seed, {static_cast<uint64_t>(spec.model)}));
  Skeleton skeleton;
  switch (spec.model) {
    case GenModel::barabasi_albert: {
      const double m = spec.model_param;
      if (std::floor(m) != m) {
        throw std::invalid_argument("barabasi_albert: m must be an integer");
      }
      skeleton = barabasi_albert_skeleton(spec.nodes, static_cast<int>(m), rng);
      break;
    }
    case GenModel::erdos_renyi:
      skeleton = erdos_renyi_skeleton(spec.nodes, spec.model_param, rng);
      break;
    case GenModel::scale_free:
      skeleton = scale_free_skeleton(spec.nodes, spec.model_param, rng);
      break;
    case GenModel::complete:
      skeleton = complete_skeleton(spec.nodes);
      break;
  }
  return orient_and_sign(spec.nodes, skeleton, rng);
}

SignedDigraph randomize_signs_directions(const SignedDigraph& g, uint64_t seed) {
  Rng rng(derive_seed(seed, {0x5167u}));
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const bool keep = rng.coin();
    const double sign = rng.coin() ? 1.0 : -1.0;
    const double magnitude = std::abs(e.weight);
    edges.push_back(keep ? Edge{e.source, e.target, sign * magnitude}
                         : Edge{e.target, e.source, sign * magnitude});
  }
  return SignedDigraph(g.node_count(), std::move(edges));
}

const char* to_string(GenModel m) {
  switch (m) {
    case GenModel::barabasi_albert: return "ba";
    case GenModel::erdos_renyi: return "er";
    case GenModel::scale_free: return "scalefree";
    case GenModel::complete: return "complete";
  }
  return "?";
}

GenModel parse_gen_model(const std::string& name) {
  if (name == "ba") return GenModel::barabasi_albert;
  if (name == "er") return GenModel::erdos_renyi;
  if (name == "scalefree") return GenModel::scale_free;
  if (name == "complete") return GenModel::complete;
  throw std::invalid_argument("unknown model '" + name + "' (expected ba|er|scalefree|complete)");
}

double default_model_param(GenModel m) {
  switch (m) {
    case GenModel::barabasi_albert: return 3.0;
    case GenModel::erdos_renyi: return 0.2;
    case GenModel::scale_free: return 3.2;
    case GenModel::complete: return 0.0;
  }
  return 0.0;
}

}  // namespace netevo
