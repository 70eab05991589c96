// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <vector>

namespace netevo {

/// One signed interaction: `source` acts on `target`. A positive weight
/// promotes the target, a negative weight represses it. A neutral
/// interaction is simply an absent edge, so weights are never zero.
struct Edge {
  int source = 0;
  int target = 0;
  double weight = 0.0;
};

/// Immutable signed directed graph over dense node indices [0, n).
///
/// Freshly ingested graphs may still carry self-loops and duplicate
/// (source, target) pairs; clean() removes both. Construction rejects
/// out-of-range indices and zero or non-finite weights. Instances are
/// safe to share across threads once built.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  SignedDigraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  /// Indices into edges() of the edges leaving `node`, in insertion order.
  std::span<const int> out_edges(int node) const {
    return {out_index_.data() + out_start_[node], out_index_.data() + out_start_[node + 1]};
  }

  /// Indices into edges() of the edges entering `node`, in insertion order.
  std::span<const int> in_edges(int node) const {
    return {in_index_.data() + in_start_[node], in_index_.data() + in_start_[node + 1]};
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency: edge indices grouped per node.
  std::vector<int> out_index_;
  std::vector<size_t> out_start_;
  std::vector<int> in_index_;
  std::vector<size_t> in_start_;
};

/// Connectivity summary. A node's degree here is its number of distinct
/// neighbors reachable via in- or out-edges (self-loops do not count).
struct DegreeStats {
  double avg_neighbors = 0.0;
  int max_degree = 0;
  std::map<int, int> degree_histogram;  // degree -> node count
};

DegreeStats degree_stats(const SignedDigraph& g);

/// Weakly connected components (edge direction ignored). Each component
/// is sorted ascending; components are ordered by their smallest node.
std::vector<std::vector<int>> weak_components(const SignedDigraph& g);

/// Size of the largest weak component, 0 for the empty graph.
int largest_component_size(const SignedDigraph& g);

struct CleanResult {
  SignedDigraph graph;
  std::vector<int> old_to_new;  // -1 for dropped nodes
};

/// Removes self-loops, duplicate (source, target) edges (first occurrence
/// kept) and every weak component with fewer than min_component_size
/// nodes, then re-indexes the survivors densely. Idempotent up to index
/// relabeling; an empty result is legal.
CleanResult clean(const SignedDigraph& g, int min_component_size);

}  // namespace netevo
