#pragma once

#include <optional>
#include <vector>

#include "sgbalance/frustration.hpp"
#include "sgbalance/graph.hpp"

namespace sgb {

struct SplitResult {
  std::vector<Edge> internal;  // both endpoints on the same side
  std::vector<Edge> external;  // endpoints on different sides
};

SplitResult internal_external_split(const SignedDigraph& g,
                                    const Partition& p);

// Fraction of internal edges that are positive; null when no internal edges.
std::optional<double> cohesiveness(const SignedDigraph& g, const Partition& p);

// Fraction of external edges that are negative; null when no external edges.
std::optional<double> divisiveness(const SignedDigraph& g, const Partition& p);

struct MesoReport {
  struct Entry {
    Partition partition;
    std::optional<double> C;
    std::optional<double> D;
  };
  std::vector<Entry> per_optimum;
  // Values at the lexicographically smallest optimal partition.
  std::optional<double> canonical_C;
  std::optional<double> canonical_D;
  // Sample standard deviation across the optima (0 when multiplicity is 1).
  double C_stddev = 0.0;
  double D_stddev = 0.0;
};

// Per-optimum cohesiveness/divisiveness across equally-scoring partitions.
// Throws InconsistentOptima if the partitions do not all share one
// frustration count.
MesoReport meso_report(const SignedDigraph& g,
                       const std::vector<Partition>& optima);

}  // namespace sgb
