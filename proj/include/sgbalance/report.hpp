#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgbalance/frustration.hpp"
#include "sgbalance/graph.hpp"
#include "sgbalance/ingest.hpp"
#include "sgbalance/meso.hpp"
#include "sgbalance/micro.hpp"

namespace sgb {

// Global transitivity of the sign-blind undirected projection:
// 3 * triangles / connected triples (0.0 when there are no triples).
// Throws TooSmall for n < 3.
double clustering_coefficient(const SignedDigraph& g);

// Sample Pearson correlation; throws LengthMismatch (unequal or < 3 points)
// and ZeroVariance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Round half away from zero to 3 decimals (table-facing values).
double round3(double x);
// Fixed 3-decimal formatting of round3(x).
std::string format3(double x);

struct DatasetConfig {
  enum class Mode { static_graph, temporal, multilayer };

  std::string label;
  Mode mode = Mode::static_graph;
  // (path, layer name) pairs; layer names used only in multilayer mode.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string format = "csv";  // csv | gml
  CsvSchema schema;
  SignRule sign_rule;
  bool symmetrize = false;
  ConflictPolicy conflict_policy = ConflictPolicy::error;
  SolveOptions solver;
  // Temporal mode: selects/orders snapshot labels; empty = every label in
  // first-appearance order.
  std::vector<std::string> times;
  // Preferred output directory for the analyze command (overridable).
  std::string out_dir;
};

struct MeasurementRow {
  std::string network_label;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m_plus = 0;
  std::size_t m_minus = 0;
  std::size_t balanced_triads = 0;
  std::size_t unbalanced_triads = 0;
  std::optional<double> T;
  std::optional<double> clustering_coefficient;
  std::optional<double> density;
  // Proven rows have L_lower == L_upper == L; unproven rows carry the best
  // bracket in place of a single L (and the F bracket that follows from it).
  long L_lower = 0;
  long L_upper = 0;
  bool proven = false;
  std::optional<double> F_lower;  // from L_upper
  std::optional<double> F_upper;  // from L_lower
  std::optional<double> C;
  std::optional<double> D;
  std::map<CensusType, double> balanced_fraction_by_type;
};

// Full per-network analysis (row plus everything needed for exports).
struct NetworkAnalysis {
  MeasurementRow row;
  SignedDigraph graph;
  SolveResult solve;
  MesoReport meso;
};

struct AnalyzeResult {
  std::vector<NetworkAnalysis> networks;  // config order
};

// Ingest per config (static / temporal snapshots / multilayer layers +
// flat), then census, solve, and meso measures for each resulting network.
// Independent networks run in parallel (BALANCE_THREADS caps workers);
// output order follows the configs.
AnalyzeResult analyze(const std::vector<DatasetConfig>& configs);

// Parses a JSON config file: either one dataset object or
// {"datasets": [...]}. Relative input paths resolve against the config
// file's directory. Throws ConfigError.
std::vector<DatasetConfig> load_configs(const std::string& path);

// Ingestion only (shared by analyze and the census/solve commands):
// the labeled networks a config expands to, in order.
std::vector<std::pair<std::string, SignedDigraph>> ingest_networks(
    const DatasetConfig& cfg);

void write_measurements_csv(const AnalyzeResult& result, std::ostream& out);
void write_measurements_json(const AnalyzeResult& result, std::ostream& out);

// One column of "name : value" cells for a single network: x_i per node,
// then f_i_j, s_i_j, t_i_j per edge, in node/edge order.
void export_partition(const SignedDigraph& g, const SolveResult& result,
                      std::ostream& sink);
std::vector<std::string> partition_cells(const SignedDigraph& g,
                                         const SolveResult& result);

// All networks' partition columns side by side (header = network labels).
void write_partitions_csv(const AnalyzeResult& result, std::ostream& out);
void write_partitions_json(const AnalyzeResult& result, std::ostream& out);

}  // namespace sgb
