// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#include "netevo/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "netevo/rng.hpp"

namespace netevo {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw DataError("failed writing " + path);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Strict full-string double parse.
bool parse_double(const std::string& text, double* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& text, long long* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end;
}

bool parse_u64(const std::string& text, uint64_t* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void malformed(const std::string& path, size_t line_no, const std::string& why) {
  throw DataError(path + ":" + std::to_string(line_no) + ": " + why);
}

// Iterates lines regardless of trailing newline, stripping '\r'.
template <typename Fn>
void for_each_line(const std::string& text, Fn&& fn) {
  size_t start = 0;
  size_t line_no = 0;
  while (start <= text.size()) {
    if (start == text.size()) break;
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    size_t len = end - start;
    if (len > 0 && text[start + len - 1] == '\r') --len;
    fn(++line_no, std::string_view(text.data() + start, len));
    start = end + 1;
  }
}

// 6 significant digits, the pinned CSV float format.
std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr const char* kCsvHeader =
    "network,n,p,t,rounds,mean_value,mean_weight,ratio,seed,solver,weight_scale";

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, ptr};
}

std::vector<EdgeListRecord> parse_edgelist(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<EdgeListRecord> records;
  for_each_line(text, [&](size_t line_no, std::string_view line) {
    if (line.empty()) return;
    const auto fields = split(std::string(line), '\t');
    if (fields.size() != 2 && fields.size() != 3) {
      malformed(path, line_no, "expected 2 or 3 tab-separated fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      malformed(path, line_no, "empty node id");
    }
    EdgeListRecord rec{fields[0], fields[1], 1.0};
    if (fields.size() == 3) {
      if (!parse_double(fields[2], &rec.weight)) {
        malformed(path, line_no, "malformed weight '" + fields[2] + "'");
      }
      if (!std::isfinite(rec.weight) || rec.weight == 0.0) {
        malformed(path, line_no, "weight must be finite and nonzero");
      }
    }
    records.push_back(std::move(rec));
  });
  return records;
}

std::vector<MitabRecord> parse_mitab(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<MitabRecord> records;
  for_each_line(text, [&](size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    auto fields = split(std::string(line), '\t');
    if (fields.size() < 2) {
      malformed(path, line_no, "expected at least 2 tab-separated columns");
    }
    MitabRecord rec;
    rec.interactor_a = std::move(fields[0]);
    rec.interactor_b = std::move(fields[1]);
    rec.rest.assign(std::make_move_iterator(fields.begin() + 2),
                    std::make_move_iterator(fields.end()));
    records.push_back(std::move(rec));
  });
  return records;
}

std::vector<EdgeListRecord> to_edge_records(const std::vector<MitabRecord>& records) {
  std::vector<EdgeListRecord> out;
  out.reserve(records.size());
  for (const MitabRecord& rec : records) {
    out.push_back({rec.interactor_a, rec.interactor_b, 1.0});
  }
  return out;
}

IdGraph ids_to_graph(const std::vector<EdgeListRecord>& records, bool assign_random,
                     uint64_t seed) {
  IdGraph result;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& id) {
    const auto [it, inserted] = index.try_emplace(id, static_cast<int>(result.ids.size()));
    if (inserted) result.ids.push_back(id);
    return it->second;
  };

  Rng rng(derive_seed(seed, {0x1d5u}));
  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const EdgeListRecord& rec : records) {
    const int u = intern(rec.source_id);
    const int v = intern(rec.target_id);
    if (assign_random) {
      const bool forward = rng.coin();
      const double sign = rng.coin() ? 1.0 : -1.0;
      const double magnitude = std::abs(rec.weight);
      edges.push_back(forward ? Edge{u, v, sign * magnitude} : Edge{v, u, sign * magnitude});
    } else {
      edges.push_back({u, v, rec.weight});
    }
  }
  result.graph = SignedDigraph(static_cast<int>(result.ids.size()), std::move(edges));
  return result;
}

void write_edgelist(const std::string& path, const SignedDigraph& g,
                    const std::vector<std::string>* ids) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (ids) {
      out += (*ids)[static_cast<size_t>(e.source)];
      out += '\t';
      out += (*ids)[static_cast<size_t>(e.target)];
    } else {
      out += std::to_string(e.source);
      out += '\t';
      out += std::to_string(e.target);
    }
    out += '\t';
    out += format_double(e.weight);
    out += '\n';
  }
  write_file(path, out);
}

// --- JSON ------------------------------------------------------------------

namespace {

nlohmann::json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError(path + ": malformed JSON");
  return j;
}

std::vector<double> number_array(const nlohmann::json& j, const char* key,
                                 const std::string& path) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw DataError(path + ": missing array '" + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw DataError(path + ": non-numeric entry in '" + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_field(const nlohmann::json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw DataError(path + ": missing number '" + key + "'");
  }
  return j[key].get<double>();
}

}  // namespace

KnapsackInstance read_kp_json(const std::string& path) {
  const nlohmann::json j = parse_json_file(path);
  KnapsackInstance inst;
  inst.values = number_array(j, "values", path);
  inst.weights = number_array(j, "weights", path);
  inst.capacity = number_field(j, "capacity", path);
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(path + ": " + e.what());
  }
  return inst;
}

void write_kp_json(const std::string& path, const KnapsackInstance& inst) {
  nlohmann::ordered_json j;
  j["values"] = inst.values;
  j["weights"] = inst.weights;
  j["capacity"] = inst.capacity;
  write_file(path, j.dump(2) + "\n");
}

NEInstance read_ne_json(const std::string& path) {
  const nlohmann::json j = parse_json_file(path);
  const double n_raw = number_field(j, "node_count", path);
  if (n_raw < 0 || std::floor(n_raw) != n_raw) {
    throw DataError(path + ": node_count must be a non-negative integer");
  }
  const int n = static_cast<int>(n_raw);

  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw DataError(path + ": missing array 'edges'");
  }
  std::vector<Edge> edges;
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number()) {
      throw DataError(path + ": each edge must be [source, target, weight]");
    }
    edges.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
  }

  if (!j.contains("advice") || !j["advice"].is_array()) {
    throw DataError(path + ": missing array 'advice'");
  }
  std::vector<int8_t> advice;
  for (const auto& v : j["advice"]) {
    if (!v.is_number_integer()) throw DataError(path + ": advice entries must be integers");
    const int a = v.get<int>();
    if (a < -1 || a > 1) throw DataError(path + ": advice entries must be -1, 0 or +1");
    advice.push_back(static_cast<int8_t>(a));
  }

  NEInstance ne;
  try {
    ne.graph = SignedDigraph(n, std::move(edges));
    ne.advice = OracleAdvice(std::move(advice));
  } catch (const std::invalid_argument& e) {
    throw DataError(path + ": " + e.what());
  }
  ne.tolerance = number_field(j, "tolerance", path);
  if (std::isnan(ne.tolerance) || ne.tolerance < 0.0) {
    throw DataError(path + ": tolerance must be non-negative");
  }
  if (ne.advice.size() != ne.graph.node_count()) {
    throw DataError(path + ": advice length does not match node_count");
  }
  return ne;
}

void write_ne_json(const std::string& path, const NEInstance& ne) {
  nlohmann::ordered_json j;
  j["node_count"] = ne.graph.node_count();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : ne.graph.edges()) {
    edges.push_back({e.source, e.target, e.weight});
  }
  auto& advice = j["advice"] = nlohmann::ordered_json::array();
  for (int8_t a : ne.advice.entries()) advice.push_back(static_cast<int>(a));
  if (!std::isfinite(ne.tolerance)) throw DataError("cannot serialize non-finite tolerance");
  j["tolerance"] = ne.tolerance;
  write_file(path, j.dump(2) + "\n");
}

std::string solution_to_json(const KnapsackSolution& sol, const std::string& solver_id) {
  nlohmann::ordered_json j;
  j["solver"] = solver_id;
  auto& sel = j["selection"] = nlohmann::ordered_json::array();
  for (uint8_t x : sol.selection) sel.push_back(static_cast<int>(x));
  j["total_value"] = sol.total_value;
  j["total_weight"] = sol.total_weight;
  j["optimal"] = sol.optimal;
  return j.dump(2) + "\n";
}

// --- results CSV -------------------------------------------------------------

std::vector<ResultRow> to_rows(const SweepResult& result) {
  std::vector<ResultRow> rows;
  rows.reserve(result.cells.size());
  for (const CellResult& cell : result.cells) {
    ResultRow row;
    row.network = result.network_name;
    row.node_count = result.node_count;
    row.pressure = cell.pressure;
    row.tolerance = cell.tolerance;
    row.rounds = cell.rounds_completed;
    row.mean_value = cell.mean_value;
    row.mean_weight = cell.mean_weight;
    row.ratio = cell.ratio;
    row.seed = result.master_seed;
    row.solver = result.solver_id;
    row.weight_scale = result.weight_scale;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_results_csv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ResultRow& row : rows) {
    if (row.network.find(',') != std::string::npos ||
        row.network.find('\n') != std::string::npos) {
      throw DataError("network name '" + row.network + "' may not contain ',' or newlines");
    }
    out += row.network;
    out += ',';
    out += std::to_string(row.node_count);
    out += ',';
    out += std::to_string(row.pressure);
    out += ',';
    out += format_g6(row.tolerance);
    out += ',';
    out += std::to_string(row.rounds);
    out += ',';
    out += format_g6(row.mean_value);
    out += ',';
    out += format_g6(row.mean_weight);
    out += ',';
    out += format_g6(row.ratio);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.solver;
    out += ',';
    out += format_g6(row.weight_scale);
    out += '\n';
  }
  return out;
}

std::string render_results_csv(const SweepResult& result) {
  return render_results_csv(to_rows(result));
}

void write_results_csv(const std::string& path, const SweepResult& result) {
  write_file(path, render_results_csv(result));
}

std::vector<ResultRow> parse_results_csv_text(const std::string& text) {
  std::vector<ResultRow> rows;
  bool saw_header = false;
  for_each_line(text, [&](size_t line_no, std::string_view line) {
    if (line.empty()) return;
    if (line == kCsvHeader) {
      saw_header = true;
      return;
    }
    if (!saw_header) {
      throw DataError("results CSV line " + std::to_string(line_no) +
                      ": expected header '" + kCsvHeader + "'");
    }
    const auto fields = split(std::string(line), ',');
    if (fields.size() != 11) {
      throw DataError("results CSV line " + std::to_string(line_no) + ": expected 11 fields");
    }
    ResultRow row;
    row.network = fields[0];
    long long n, p, rounds;
    if (!parse_int(fields[1], &n) || !parse_int(fields[2], &p) || !parse_int(fields[4], &rounds) ||
        !parse_double(fields[3], &row.tolerance) || !parse_double(fields[5], &row.mean_value) ||
        !parse_double(fields[6], &row.mean_weight) || !parse_double(fields[7], &row.ratio) ||
        !parse_u64(fields[8], &row.seed) || !parse_double(fields[10], &row.weight_scale)) {
      throw DataError("results CSV line " + std::to_string(line_no) + ": malformed field");
    }
    row.node_count = static_cast<int>(n);
    row.pressure = static_cast<int>(p);
    row.rounds = static_cast<int>(rounds);
    row.solver = fields[9];
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<ResultRow> read_results_csv(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_results_csv_text(text);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace netevo
