// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: generate / ingest / reduce / solve-kp /
// simulate / report. Exit codes: 0 success, 1 usage error, 2 data error,
// 3 internal error.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "netevo/figure.hpp"
#include "netevo/graph.hpp"
#include "netevo/io.hpp"
#include "netevo/ne_model.hpp"
#include "netevo/netgen.hpp"
#include "netevo/sim.hpp"

namespace {

using netevo::DataError;

// Comma-separated numbers; "inf" is accepted for tolerances.
std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    if (item.empty()) throw std::invalid_argument(flag + ": empty entry in list '" + text + "'");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument(flag + ": malformed number '" + item + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (double v : parse_double_list(text, flag)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw std::invalid_argument(flag + ": expected integers, got '" + text + "'");
    }
    out.push_back(i);
  }
  return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_generate(const std::string& model_name, int nodes, double param, bool param_set,
                 uint64_t seed, const std::string& out) {
  netevo::GenSpec spec;
  spec.model = netevo::parse_gen_model(model_name);
  spec.nodes = nodes;
  spec.model_param = param_set ? param : netevo::default_model_param(spec.model);
  spec.seed = seed;
  const netevo::SignedDigraph g = netevo::generate(spec);
  netevo::write_edgelist(out, g);
  std::cerr << "generated " << netevo::to_string(spec.model) << " network: "
            << g.node_count() << " nodes, " << g.edge_count() << " edges -> " << out << "\n";
  return 0;
}

int run_ingest(const std::string& format, const std::string& in, int min_component,
               bool min_component_set, bool randomize, uint64_t seed, const std::string& out) {
  std::vector<netevo::EdgeListRecord> records;
  if (format == "edgelist") {
    records = netevo::parse_edgelist(in);
  } else if (format == "mitab") {
    records = netevo::to_edge_records(netevo::parse_mitab(in));
  } else {
    throw std::invalid_argument("--format must be 'edgelist' or 'mitab'");
  }

  netevo::IdGraph idg = netevo::ids_to_graph(records, randomize, seed);
  int min_size = min_component;
  if (!min_component_set) {
    // Default: keep only the largest weak component ("giant component").
    min_size = std::max(1, netevo::largest_component_size(idg.graph));
  } else if (min_size < 1) {
    throw std::invalid_argument("--min-component-size must be >= 1");
  }

  const netevo::CleanResult cleaned = netevo::clean(idg.graph, min_size);
  std::vector<std::string> surviving_ids(
      static_cast<size_t>(cleaned.graph.node_count()));
  for (size_t old_idx = 0; old_idx < cleaned.old_to_new.size(); ++old_idx) {
    const int new_idx = cleaned.old_to_new[old_idx];
    if (new_idx >= 0) surviving_ids[static_cast<size_t>(new_idx)] = idg.ids[old_idx];
  }
  netevo::write_edgelist(out, cleaned.graph, &surviving_ids);
  std::cerr << "ingested " << idg.graph.node_count() << " nodes / " << records.size()
            << " records; kept " << cleaned.graph.node_count() << " nodes / "
            << cleaned.graph.edge_count() << " edges -> " << out << "\n";
  return 0;
}

int run_reduce(const std::string& direction, const std::string& mode_name,
               const std::string& in, const std::string& out) {
  netevo::ReductionMode mode;
  if (mode_name == "legacy") {
    mode = netevo::ReductionMode::legacy;
  } else if (mode_name == "corrected") {
    mode = netevo::ReductionMode::corrected;
  } else {
    throw std::invalid_argument("--mode must be 'legacy' or 'corrected'");
  }

  if (direction == "kp-to-ne") {
    const netevo::KnapsackInstance kp = netevo::read_kp_json(in);
    netevo::write_ne_json(out, netevo::kp_to_ne(kp, mode));
  } else if (direction == "ne-to-kp") {
    const netevo::NEInstance ne = netevo::read_ne_json(in);
    netevo::write_kp_json(out, netevo::ne_to_kp(ne));
  } else {
    throw std::invalid_argument("--direction must be 'kp-to-ne' or 'ne-to-kp'");
  }
  return 0;
}

int run_solve_kp(const std::string& in, const std::string& solver) {
  const netevo::KnapsackInstance kp = netevo::read_kp_json(in);
  netevo::KnapsackSolution sol;
  if (solver == "dp") {
    sol = netevo::solve_dp(kp);
  } else if (solver == "brute") {
    sol = netevo::solve_bruteforce(kp);
  } else if (solver == "greedy") {
    sol = netevo::solve_greedy(kp);
  } else {
    throw std::invalid_argument("--solver must be 'dp', 'brute' or 'greedy'");
  }
  std::cout << netevo::solution_to_json(sol, solver);
  return 0;
}

int run_simulate(const std::string& network_path, const std::string& pressures,
                 const std::string& tolerances, int rounds, uint64_t seed, int workers,
                 const std::string& out) {
  if (rounds < 1) throw std::invalid_argument("--rounds must be >= 1");
  if (workers < 1) throw std::invalid_argument("--workers must be >= 1");

  const auto records = netevo::parse_edgelist(network_path);
  const netevo::IdGraph idg = netevo::ids_to_graph(records, /*assign_random=*/false, 0);

  netevo::SweepConfig cfg;
  cfg.pressures = parse_int_list(pressures, "--pressures");
  cfg.tolerances = parse_double_list(tolerances, "--tolerances");
  cfg.rounds = rounds;
  cfg.master_seed = seed;
  cfg.worker_count = workers;

  const std::string name = std::filesystem::path(network_path).stem().string();
  const netevo::SweepResult result = netevo::run_sweep(idg.graph, cfg, name);
  print_warnings(result.warnings);
  netevo::write_results_csv(out, result);
  std::cerr << "simulated " << result.cells.size() << " cells x " << rounds
            << " rounds on " << name << " -> " << out << "\n";
  return 0;
}

int run_report(const std::string& in, const std::string& out) {
  const std::vector<netevo::ResultRow> rows = netevo::read_results_csv(in);
  print_warnings(netevo::emit_figure(rows, out));
  std::cerr << "report -> " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed-network evolution toolkit"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a synthetic signed network");
  std::string gen_model;
  int gen_nodes = 0;
  double gen_param = 0.0;
  uint64_t gen_seed = 1;
  std::string gen_out;
  generate->add_option("--model", gen_model, "ba|er|scalefree|complete")->required();
  generate->add_option("--nodes", gen_nodes, "Node count")->required()->check(CLI::PositiveNumber);
  auto* gen_param_opt = generate->add_option("--param", gen_param, "Model parameter");
  generate->add_option("--seed", gen_seed, "Random seed")->default_val(1);
  generate->add_option("--out", gen_out, "Output edge-list TSV")->required();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Clean and index an external network file");
  std::string ing_format, ing_in, ing_out;
  int ing_min = 0;
  bool ing_randomize = false;
  uint64_t ing_seed = 1;
  ingest->add_option("--format", ing_format, "edgelist|mitab")->required();
  ingest->add_option("--in", ing_in, "Input file")->required()->check(CLI::ExistingFile);
  auto* ing_min_opt = ingest->add_option("--min-component-size", ing_min,
                                         "Drop weak components smaller than this "
                                         "(default: keep only the largest)");
  ingest->add_flag("--randomize-signs", ing_randomize,
                   "Draw each edge's direction and sign by fair coin");
  ingest->add_option("--seed", ing_seed, "Random seed")->default_val(1);
  ingest->add_option("--out", ing_out, "Output edge-list TSV")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Convert between knapsack JSON and network JSON");
  std::string red_dir, red_mode = "corrected", red_in, red_out;
  reduce->add_option("--direction", red_dir, "kp-to-ne|ne-to-kp")->required();
  reduce->add_option("--mode", red_mode, "legacy|corrected (default corrected)");
  reduce->add_option("--in", red_in, "Input JSON")->required()->check(CLI::ExistingFile);
  reduce->add_option("--out", red_out, "Output JSON")->required();

  // solve-kp
  auto* solve_kp = app.add_subcommand("solve-kp", "Solve a knapsack JSON instance");
  std::string kp_in, kp_solver = "dp";
  solve_kp->add_option("--in", kp_in, "Knapsack JSON")->required()->check(CLI::ExistingFile);
  solve_kp->add_option("--solver", kp_solver, "dp|brute|greedy (default dp)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo pressure/tolerance sweep");
  std::string sim_network, sim_p = "5,10,50,500", sim_t = "5,10,50,500", sim_out;
  int sim_rounds = 10000;
  uint64_t sim_seed = 1;
  int sim_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  simulate->add_option("--network", sim_network, "Edge-list TSV")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--pressures", sim_p, "Comma-separated pressures (default 5,10,50,500)");
  simulate->add_option("--tolerances", sim_t, "Comma-separated tolerances (default 5,10,50,500)");
  simulate->add_option("--rounds", sim_rounds, "Rounds per cell (default 10000)");
  simulate->add_option("--seed", sim_seed, "Master seed")->default_val(1);
  simulate->add_option("--workers", sim_workers, "Worker threads (default: hardware)");
  simulate->add_option("--out", sim_out, "Output results CSV")->required();

  // report
  auto* report = app.add_subcommand("report", "Render the results bar chart");
  std::string rep_in, rep_out;
  report->add_option("--in", rep_in, "Results CSV")->required()->check(CLI::ExistingFile);
  report->add_option("--out", rep_out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (generate->parsed()) {
      return run_generate(gen_model, gen_nodes, gen_param, gen_param_opt->count() > 0, gen_seed,
                          gen_out);
    }
    if (ingest->parsed()) {
      return run_ingest(ing_format, ing_in, ing_min, ing_min_opt->count() > 0, ing_randomize,
                        ing_seed, ing_out);
    }
    if (reduce->parsed()) return run_reduce(red_dir, red_mode, red_in, red_out);
    if (solve_kp->parsed()) return run_solve_kp(kp_in, kp_solver);
    if (simulate->parsed()) {
      return run_simulate(sim_network, sim_p, sim_t, sim_rounds, sim_seed, sim_workers, sim_out);
    }
    if (report->parsed()) return run_report(rep_in, rep_out);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
