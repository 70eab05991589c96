// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netevo {

SignedDigraph::SignedDigraph(int node_count, std::vector<Edge> edges) {
  if (node_count < 0) {
    throw std::invalid_argument("node count must be non-negative");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.source < 0 || e.source >= node_count || e.target < 0 || e.target >= node_count) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": node index out of range");
    }
    if (!std::isfinite(e.weight) || e.weight == 0.0) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  ": weight must be finite and nonzero");
    }
  }

  node_count_ = node_count;
  edges_ = std::move(edges);

  const size_t n = static_cast<size_t>(node_count_);
  out_start_.assign(n + 1, 0);
  in_start_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_start_[static_cast<size_t>(e.source) + 1];
    ++in_start_[static_cast<size_t>(e.target) + 1];
  }
  std::partial_sum(out_start_.begin(), out_start_.end(), out_start_.begin());
  std::partial_sum(in_start_.begin(), in_start_.end(), in_start_.begin());

  out_index_.resize(edges_.size());
  in_index_.resize(edges_.size());
  std::vector<size_t> out_fill(out_start_.begin(), out_start_.end() - 1);
  std::vector<size_t> in_fill(in_start_.begin(), in_start_.end() - 1);
  for (size_t i = 0; i < edges_.size(); ++i) {
    out_index_[out_fill[static_cast<size_t>(edges_[i].source)]++] = static_cast<int>(i);
    in_index_[in_fill[static_cast<size_t>(edges_[i].target)]++] = static_cast<int>(i);
  }
}

DegreeStats degree_stats(const SignedDigraph& g) {
  DegreeStats stats;
  const int n = g.node_count();
  if (n == 0) return stats;

  std::vector<int> stamp(static_cast<size_t>(n), -1);
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    int degree = 0;
    auto visit = [&](int neighbor) {
      if (neighbor == v) return;  // self-loops are not neighbors
      if (stamp[static_cast<size_t>(neighbor)] != v) {
        stamp[static_cast<size_t>(neighbor)] = v;
        ++degree;
      }
    };
    for (int ei : g.out_edges(v)) visit(g.edge(ei).target);
    for (int ei : g.in_edges(v)) visit(g.edge(ei).source);
    total += degree;
    stats.max_degree = std::max(stats.max_degree, degree);
    ++stats.degree_histogram[degree];
  }
  stats.avg_neighbors = static_cast<double>(total) / static_cast<double>(n);
  return stats;
}

namespace {

// Union-find over node indices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) {
      parent_[static_cast<size_t>(v)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(v)])];
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

std::vector<std::vector<int>> weak_components(const SignedDigraph& g) {
  const int n = g.node_count();
  DisjointSets sets(n);
  for (const Edge& e : g.edges()) sets.unite(e.source, e.target);

  std::vector<int> root_to_slot(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> components;
  for (int v = 0; v < n; ++v) {
    const int root = sets.find(v);
    int& slot = root_to_slot[static_cast<size_t>(root)];
    if (slot < 0) {
      slot = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[static_cast<size_t>(slot)].push_back(v);
  }
  return components;  // members ascending, components ordered by smallest member
}

int largest_component_size(const SignedDigraph& g) {
  int best = 0;
  for (const auto& component : weak_components(g)) {
    best = std::max(best, static_cast<int>(component.size()));
  }
  return best;
}

CleanResult clean(const SignedDigraph& g, int min_component_size) {
  if (min_component_size < 1) {
    throw std::invalid_argument("min_component_size must be >= 1");
  }
  const int n = g.node_count();

  // Self-loops out, duplicates out (first occurrence wins).
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  std::unordered_set<long long> seen;
  seen.reserve(g.edges().size() * 2);
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    const long long key = static_cast<long long>(e.source) * n + e.target;
    if (!seen.insert(key).second) continue;
    kept.push_back(e);
  }

  DisjointSets sets(n);
  for (const Edge& e : kept) sets.unite(e.source, e.target);
  std::vector<int> component_size(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++component_size[static_cast<size_t>(sets.find(v))];

  CleanResult result;
  result.old_to_new.assign(static_cast<size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (component_size[static_cast<size_t>(sets.find(v))] >= min_component_size) {
      result.old_to_new[static_cast<size_t>(v)] = next++;
    }
  }

  std::vector<Edge> remapped;
  remapped.reserve(kept.size());
  for (const Edge& e : kept) {
    const int s = result.old_to_new[static_cast<size_t>(e.source)];
    const int t = result.old_to_new[static_cast<size_t>(e.target)];
    if (s >= 0 && t >= 0) remapped.push_back({s, t, e.weight});
  }
  result.graph = SignedDigraph(next, std::move(remapped));
  return result;
}

}  // namespace netevo
