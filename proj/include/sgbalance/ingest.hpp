#pragma once

#include <istream>
#include <string>
#include <vector>

#include "sgbalance/graph.hpp"

namespace sgb {

struct RawRecord {
  NodeId source;
  NodeId target;
  double weight = 0.0;
  std::string layer;  // optional
  std::string time;   // optional
};

// Column mapping for CSV edge lists. Header row is required; `layer` and
// `time` are optional (empty = not mapped). Delimiter defaults to comma;
// tab is supported for robustness.
struct CsvSchema {
  std::string source = "source";
  std::string target = "target";
  std::string weight = "weight";
  std::string layer;
  std::string time;
  char delimiter = ',';
};

// One RawRecord per data row, in file order.
std::vector<RawRecord> parse_edge_csv(std::istream& in,
                                      const CsvSchema& schema);

// Minimal GML subset: a graph block with node [ id ... ] and
// edge [ source ... target ... sign ... ] entries; sign must be +1/-1.
SignedDigraph parse_gml(std::istream& in);

struct SignRule {
  enum class Variant { sign_only, threshold, rank_top_bottom };
  Variant variant = Variant::sign_only;
  // threshold: keep |weight| >= min_abs, mapping to sign(weight).
  double min_abs = 1.0;
  // rank_top_bottom: weights are ranks 1..rank_max-1 per source (grouped by
  // source/time/layer); ranks <= top_k keep +1, ranks > rank_max-1-bottom_k
  // keep -1, everything else drops.
  int top_k = 3;
  int bottom_k = 3;
  int rank_max = 17;

  static SignRule sign_only();
  static SignRule threshold(double min_abs);
  static SignRule rank_top_bottom(int top_k, int bottom_k, int rank_max);
};

// Maps records to signed triples per the rule; order-preserving, never
// invents edges.
std::vector<EdgeTriple> apply_sign_rule(const std::vector<RawRecord>& records,
                                        const SignRule& rule);

// Adds the reverse of every edge with the same sign. Idempotent; a
// reciprocal pair with opposite signs is a ConflictingSign error.
SignedDigraph symmetrize(const SignedDigraph& g);

}  // namespace sgb
