#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgbalance/graph.hpp"

namespace sgb {

// Null-dyad-free triad census classes, named by mutual/asymmetric dyad
// counts plus orientation (T transitive, C cyclic, D down, U up).
enum class CensusType { t030T, t030C, t120D, t120U, t120C, t210, t300 };

std::string to_string(CensusType t);

// Three nodes with every pair connected by at least one directed edge.
// Pairs are indexed 0:(a,b), 1:(a,c), 2:(b,c) for sorted nodes a < b < c;
// "fwd" is the low->high edge and "rev" the high->low edge.
struct Triad {
  std::array<NodeIndex, 3> nodes;  // ascending
  struct PairInfo {
    bool fwd = false;
    bool rev = false;
    Sign sf = Sign::plus;
    Sign sr = Sign::plus;
    int count() const { return (fwd ? 1 : 0) + (rev ? 1 : 0); }
  };
  std::array<PairInfo, 3> pairs;

  int mutual_dyads() const;
  // All edges among the triple, deterministic order.
  std::vector<Edge> edge_list() const;
};

struct SemiEdge {
  NodeIndex src;
  NodeIndex dst;
  Sign sign;
  friend bool operator==(const SemiEdge&, const SemiEdge&) = default;
};

// One directed edge per unordered pair of a triad (always exactly 3 edges,
// in pair order (a,b),(a,c),(b,c)).
struct Semicycle {
  std::array<SemiEdge, 3> edges;
};

// Every fully-connected triple, exactly once, ordered lexicographically on
// the sorted node index triple. The callback form streams without
// materializing the list.
std::vector<Triad> enumerate_triads(const SignedDigraph& g);
void for_each_triad(const SignedDigraph& g,
                    const std::function<void(const Triad&)>& fn);

CensusType classify_triad(const Triad& t);

// All one-edge-per-pair selections; count = 2^(mutual dyads).
// Deterministic order: per pair, the low->high edge enumerates before the
// high->low edge, pair 2 varying fastest.
std::vector<Semicycle> semicycles(const Triad& t);

// True iff every chained pair of the semicycle's edges (A->B, B->C) has its
// closing edge (A->C) present somewhere in the triad's full edge set.
bool is_transitive(const Semicycle& sc, const Triad& t);

// True iff the sign product over the 3 edges is positive.
bool semicycle_balanced(const Semicycle& sc);

// True iff all semicycles of the triad are transitive; equivalent to the
// census type being one of {030T, 120D, 120U, 300}.
bool triad_transitive(const Triad& t);

// A transitive triad is balanced iff all of its semicycles are balanced.
bool triad_balanced(const Triad& t);

struct MicroReport {
  std::size_t transitive_triad_count = 0;
  std::size_t balanced_count = 0;
  std::size_t unbalanced_count = 0;
  std::optional<double> T;  // balanced / transitive; null if no transitive triads
  // balanced triads of each transitive type / all transitive triads;
  // sums to T across {030T, 120D, 120U, 300}.
  std::map<CensusType, double> balanced_fraction_by_type;
  // Full census and per-type balanced counts (transitive types only for
  // balanced_by_type).
  std::map<CensusType, std::size_t> census;
  std::map<CensusType, std::size_t> balanced_by_type;
  std::size_t triad_count = 0;
};

// Triad-level balance statistics. Only triads whose semicycles are all
// transitive count toward T; mixed types (120C, 210) and 030C are excluded
// from both numerator and denominator.
MicroReport micro_stats(const SignedDigraph& g);

}  // namespace sgb
