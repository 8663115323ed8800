#pragma once

// Shared fixtures and independent brute-force reference implementations used
// to validate the library. The reference code here deliberately re-derives
// every quantity from first principles over raw edge lists.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sgbalance/graph.hpp"

namespace sgbtest {

using namespace sgb;

// Graph over nodes "0".."n-1" (node index i <=> id std::to_string(i)),
// keeping isolated nodes.
inline SignedDigraph make_graph(
    int n, const std::vector<std::tuple<int, int, int>>& arcs) {
  std::vector<NodeId> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes.push_back(std::to_string(i));
  std::sort(nodes.begin(), nodes.end(), node_id_less);
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& [u, v, s] : arcs)
    edges.push_back({static_cast<NodeIndex>(u), static_cast<NodeIndex>(v),
                     sign_from_int(s)});
  return build_graph_indexed(std::move(nodes), std::move(edges));
}

inline SignedDigraph random_digraph(std::mt19937_64& rng, int n, double p_edge,
                                    double p_neg) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::tuple<int, int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (coin(rng) >= p_edge) continue;
      arcs.emplace_back(u, v, coin(rng) < p_neg ? -1 : +1);
    }
  return make_graph(n, arcs);
}

// Frustration count computed straight from the definition.
inline long brute_count(const SignedDigraph& g,
                        const std::vector<std::uint8_t>& side) {
  long f = 0;
  for (const Edge& e : g.edges()) {
    bool same = side[e.src] == side[e.dst];
    if (e.sign == Sign::plus ? !same : same) ++f;
  }
  return f;
}

// Exhaustive minimum over all side vectors with node 0 fixed to side 0.
inline long brute_L(const SignedDigraph& g) {
  std::size_t n = g.n();
  if (n == 0) return 0;
  long best = static_cast<long>(g.m()) + 1;
  std::vector<std::uint8_t> side(n, 0);
  std::uint64_t limit = 1ull << (n - 1);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (std::size_t i = 1; i < n; ++i)
      side[i] = static_cast<std::uint8_t>((mask >> (i - 1)) & 1);
    best = std::min(best, brute_count(g, side));
  }
  return best;
}

// Every canonical side vector attaining the exhaustive minimum, sorted.
inline std::vector<Partition> brute_optima(const SignedDigraph& g) {
  std::size_t n = g.n();
  std::vector<Partition> out;
  if (n == 0) return out;
  long best = brute_L(g);
  std::vector<std::uint8_t> side(n, 0);
  std::uint64_t limit = 1ull << (n - 1);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (std::size_t i = 1; i < n; ++i)
      side[i] = static_cast<std::uint8_t>((mask >> (i - 1)) & 1);
    if (brute_count(g, side) == best) out.emplace_back(side);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sgbtest
