// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netevo/graph.hpp"
#include "netevo/knapsack.hpp"
#include "netevo/ne_model.hpp"
#include "netevo/sim.hpp"

namespace netevo {

/// Malformed or unreadable input data (maps to CLI exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeListRecord {
  std::string source_id;
  std::string target_id;
  double weight = 1.0;
};

/// Minimal PSI-MI TAB line: the two interactor columns, with everything
/// else retained opaquely.
struct MitabRecord {
  std::string interactor_a;
  std::string interactor_b;
  std::vector<std::string> rest;
};

/// TSV edge list: source<TAB>target[<TAB>weight], weight defaulting to
/// +1.0. Blank lines are skipped; anything else malformed raises a
/// DataError naming the line.
std::vector<EdgeListRecord> parse_edgelist(const std::string& path);

/// Tab-separated, >= 2 columns per line; '#'-prefixed lines are skipped.
std::vector<MitabRecord> parse_mitab(const std::string& path);

/// MITAB pairs as unit-weight edge records (direction and sign get drawn
/// later, at graph assembly).
std::vector<EdgeListRecord> to_edge_records(const std::vector<MitabRecord>& records);

struct IdGraph {
  SignedDigraph graph;
  std::vector<std::string> ids;  // dense index -> external id
};

/// Interns string ids to dense indices in first-appearance order. With
/// assign_random, each record's direction and sign are drawn by fair
/// coin (magnitude kept); otherwise direction is source->target and the
/// sign is the record's weight sign.
IdGraph ids_to_graph(const std::vector<EdgeListRecord>& records, bool assign_random,
                     uint64_t seed);

/// Writes the canonical 3-column TSV (LF endings, round-trip exact
/// weights). Node ids come from `ids` when given, else the numeric index.
void write_edgelist(const std::string& path, const SignedDigraph& g,
                    const std::vector<std::string>* ids = nullptr);

// --- knapsack / network-evolution instance JSON -------------------------

/// {"values":[...],"weights":[...],"capacity":c}
KnapsackInstance read_kp_json(const std::string& path);
void write_kp_json(const std::string& path, const KnapsackInstance& inst);

/// {"node_count":n,"edges":[[source,target,weight],...],
///  "advice":[...],"tolerance":t}
NEInstance read_ne_json(const std::string& path);
void write_ne_json(const std::string& path, const NEInstance& ne);

std::string solution_to_json(const KnapsackSolution& sol, const std::string& solver_id);

// --- sweep results CSV ---------------------------------------------------

struct ResultRow {
  std::string network;
  int node_count = 0;
  int pressure = 0;
  double tolerance = 0.0;
  int rounds = 0;
  double mean_value = 0.0;
  double mean_weight = 0.0;
  double ratio = 0.0;
  uint64_t seed = 0;
  std::string solver;
  double weight_scale = 1.0;
};

std::vector<ResultRow> to_rows(const SweepResult& result);

/// Fixed column order, floats with 6 significant digits:
/// network,n,p,t,rounds,mean_value,mean_weight,ratio,seed,solver,weight_scale
std::string render_results_csv(const std::vector<ResultRow>& rows);
std::string render_results_csv(const SweepResult& result);
void write_results_csv(const std::string& path, const SweepResult& result);

/// Repeated header lines are tolerated, so concatenated CSVs parse.
std::vector<ResultRow> parse_results_csv_text(const std::string& text);
std::vector<ResultRow> read_results_csv(const std::string& path);

/// Shortest exact round-trip formatting (std::to_chars).
std::string format_double(double v);

}  // namespace netevo
