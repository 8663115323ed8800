#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgbalance/graph.hpp"

namespace sgb {

struct SolveOptions {
  // Maximum branch-and-bound nodes across all phases of one solve.
  std::uint64_t node_budget = 50'000'000;
  // Wall-clock cap in seconds.
  double time_budget_s = 300.0;
  // Random restarts for the local-search warm start (a deterministic
  // all-one-side start always runs first).
  int restarts = 50;
  // Also enumerate every optimal partition (up to enumeration_cap).
  bool enumerate_all = false;
  std::size_t enumeration_cap = 64;
  // Seed for the local-search restarts; fixed seed -> fully deterministic
  // results.
  std::uint64_t seed = 0;
};

// Certified bracket on the frustration index. The certificate partition
// always scores exactly `upper`; local-search certificates additionally
// satisfy upper <= floor(m/2) (single-flip local optimality).
struct Bounds {
  long lower = 0;
  long upper = 0;
  Partition upper_partition;
};

struct SolveResult {
  long L = 0;  // objective value; the exact frustration index when proven
  Partition partition;  // canonical; scores exactly L
  bool proven = false;  // true iff lower == upper at termination
  std::uint64_t explored_nodes = 0;
  std::optional<std::vector<Partition>> all_optima;
  bool optima_truncated = false;
  Bounds bounds;  // best bracket at termination (lower == upper when proven)
};

// Number of frustrated edges under p: positive edges crossing sides plus
// negative edges inside a side.
long frustration_count(const SignedDigraph& g, const Partition& p);

enum class Situation { internal, external };

struct EdgeClass {
  Edge edge;
  Situation situation;
  bool frustrated;
  // 3 = positive internal, 1 = negative internal,
  // -1 = positive external, -3 = negative external.
  int t;
};

std::vector<EdgeClass> classify_edges(const SignedDigraph& g,
                                      const Partition& p);

// Combinatorial lower bound: count of reciprocal dyads carrying both signs
// (each forces one frustrated edge under every partition) plus a greedy
// packing of edge-disjoint unbalanced semicycles over the remaining edges.
long lower_bound(const SignedDigraph& g);

// Hill-climbing on single-node flips: one deterministic all-one-side start
// plus opts.restarts random starts, keeping the best partition found.
Bounds local_search(const SignedDigraph& g, const SolveOptions& opts = {});

// Exact minimum via branch-and-bound over node side assignments, decomposed
// by connected component, with the lexicographically smallest node of each
// component fixed to side 0. When proven, the reported partition is the
// lexicographically smallest optimal side vector. On budget exhaustion the
// result has proven=false and carries the best bounds found. Graphs with
// m > 10000 under default budgets skip the exact search and report bounds
// only; raising either budget re-enables it.
SolveResult solve_exact(const SignedDigraph& g, const SolveOptions& opts = {});

struct OptimaResult {
  std::vector<Partition> optima;  // canonical, deduplicated, sorted
  bool truncated = false;
};

// All canonical partitions attaining the exact frustration index,
// deduplicated up to complement, capped at `cap`.
OptimaResult enumerate_optima(const SignedDigraph& g, std::size_t cap,
                              const SolveOptions& opts = {});

// Normalized index 1 - 2L/m. Throws EmptyGraph when m == 0.
double normalized_F(long L, std::size_t m);

}  // namespace sgb
