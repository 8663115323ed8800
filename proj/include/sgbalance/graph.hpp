#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sgbalance/errors.hpp"

namespace sgb {

// Edge sign: strictly +1 or -1, never 0.
enum class Sign : int { minus = -1, plus = +1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

// Converts an integer to a Sign; anything other than +1/-1 is rejected.
Sign sign_from_int(long long v);

using NodeId = std::string;
using NodeIndex = std::uint32_t;

// Ordering for node identifiers: all-digit labels compare by numeric value
// (via zero-padded keys), everything else lexicographically; ties broken by
// the raw string. Gives "2" < "10" and a stable order across datasets.
std::string node_order_key(const NodeId& id);
bool node_id_less(const NodeId& a, const NodeId& b);

struct EdgeTriple {
  NodeId source;
  NodeId target;
  long long sign;  // must be +1 or -1
};

struct Edge {
  NodeIndex src;
  NodeIndex dst;
  Sign sign;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable signed directed graph.
//
// Nodes are opaque string identifiers stored in node_id_less order; all
// index-based APIs refer to positions in that order. No self-loops, at most
// one edge per ordered pair.
class SignedDigraph {
 public:
  SignedDigraph() = default;

  std::size_t n() const { return nodes_.size(); }
  std::size_t m() const { return edges_.size(); }
  std::size_t m_plus() const { return m_plus_; }
  std::size_t m_minus() const { return edges_.size() - m_plus_; }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const NodeId& node(NodeIndex i) const { return nodes_.at(i); }
  std::optional<NodeIndex> index_of(const NodeId& id) const;
  // Like index_of but throws UnknownNode.
  NodeIndex require_index(const NodeId& id) const;

  // Edges sorted by (src, dst).
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Sign> edge_sign(NodeIndex u, NodeIndex v) const;

  // Out-/in-neighbors with edge signs, sorted by neighbor index.
  const std::vector<std::pair<NodeIndex, Sign>>& out(NodeIndex u) const {
    return out_.at(u);
  }
  const std::vector<std::pair<NodeIndex, Sign>>& in(NodeIndex u) const {
    return in_.at(u);
  }

  // Underlying undirected projection: neighbors connected in either
  // direction, sorted ascending, each listed once.
  const std::vector<NodeIndex>& und_neighbors(NodeIndex u) const {
    return und_.at(u);
  }
  // Number of connected unordered pairs in the projection.
  std::size_t und_pair_count() const { return und_pairs_; }

  // Total signed degree |in| + |out|.
  std::size_t degree(NodeIndex u) const {
    return out_.at(u).size() + in_.at(u).size();
  }

  friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  friend SignedDigraph build_graph(const std::vector<EdgeTriple>&);
  friend SignedDigraph build_graph_indexed(std::vector<NodeId> nodes,
                                           std::vector<Edge> edges);

  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeIndex, Sign>>> out_, in_;
  std::vector<std::vector<NodeIndex>> und_;
  std::size_t m_plus_ = 0;
  std::size_t und_pairs_ = 0;
};

// Builds a graph from raw triples. Identical duplicate triples are silently
// deduplicated; the same ordered pair with both signs is an error.
SignedDigraph build_graph(const std::vector<EdgeTriple>& triples);

// Internal fast path: nodes must already be sorted per node_id_less and
// unique; edges refer to indices, no duplicates/self-loops (checked).
SignedDigraph build_graph_indexed(std::vector<NodeId> nodes,
                                  std::vector<Edge> edges);

// Two-block node partition, stored as a side bit per node index.
// The canonical form has node 0 on side 0, so a partition and its
// complement canonicalize identically.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint8_t> sides);
  static Partition all_zero(std::size_t n);

  std::size_t size() const { return side_.size(); }
  std::uint8_t side(NodeIndex i) const { return side_.at(i); }
  const std::vector<std::uint8_t>& sides() const { return side_; }

  Partition complement() const;
  Partition canonical() const;
  bool is_canonical() const { return side_.empty() || side_[0] == 0; }

  // Indices assigned to the given side, ascending.
  std::vector<NodeIndex> members(std::uint8_t side) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic order on the side vector.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.side_ < b.side_;
  }

 private:
  std::vector<std::uint8_t> side_;
};

// Builds a partition for g from a (node id -> side) listing; every node of g
// must be covered exactly; unknown or missing nodes raise UnknownNode.
Partition partition_from_sides(
    const SignedDigraph& g,
    const std::vector<std::pair<NodeId, int>>& assignment);

struct GraphSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m_plus = 0;
  std::size_t m_minus = 0;
  std::optional<double> density;  // m / (n*(n-1)); null for n < 2
};

GraphSummary summary(const SignedDigraph& g);

// Ordered sequence of labeled snapshots.
struct TemporalNetwork {
  std::vector<std::pair<std::string, SignedDigraph>> snapshots;
};

// Named layers over a shared node universe (keys unique, insertion-ordered).
struct MultilayerNetwork {
  std::vector<std::pair<std::string, SignedDigraph>> layers;
};

enum class ConflictPolicy { error, keep_negative, keep_positive };

// Union of all layers' nodes and edges. Ordered pairs repeated with the same
// sign collapse to one edge; pairs carrying both signs across layers follow
// the policy (default: error).
SignedDigraph flatten(const MultilayerNetwork& ml,
                      ConflictPolicy policy = ConflictPolicy::error);

// Negates the sign of every edge with exactly one endpoint in `subset`
// (a switching; preserves frustration index and semicycle balance).
SignedDigraph switch_cut(const SignedDigraph& g,
                         const std::vector<NodeId>& subset);
SignedDigraph switch_cut_indices(const SignedDigraph& g,
                                 const std::vector<NodeIndex>& subset);

// Connected components of the undirected projection; each component's node
// list ascending; components ordered by smallest member.
std::vector<std::vector<NodeIndex>> und_components(const SignedDigraph& g);

}  // namespace sgb
