#include <array>
#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sgbalance/micro.hpp"

using namespace sgb;
using sgbtest::make_graph;
using sgbtest::random_digraph;

namespace {

// ---------------------------------------------------------------------------
// Independent reference implementation: works on raw (src, dst, sign)
// triples over a node triple, re-deriving semicycles, transitivity, and
// balance from their definitions with plain loops.
// ---------------------------------------------------------------------------

struct RefArc {
  NodeIndex src, dst;
  int sign;
};

struct RefTriadStats {
  bool is_triad = false;     // all three pairs connected
  bool transitive = false;   // every semicycle transitive
  bool balanced = false;     // transitive and every semicycle positive
  std::size_t semicycle_count = 0;
};

RefTriadStats ref_triple(const SignedDigraph& g, NodeIndex a, NodeIndex b,
                         NodeIndex c) {
  std::array<NodeIndex, 3> nodes{a, b, c};
  std::vector<RefArc> arcs;
  for (NodeIndex u : nodes)
    for (NodeIndex v : nodes) {
      if (u == v) continue;
      if (auto s = g.edge_sign(u, v)) arcs.push_back({u, v, to_int(*s)});
    }
  auto has_arc = [&](NodeIndex u, NodeIndex v) {
    for (const RefArc& e : arcs)
      if (e.src == u && e.dst == v) return true;
    return false;
  };

  RefTriadStats stats;
  // Pair connectivity.
  std::array<std::pair<NodeIndex, NodeIndex>, 3> pairs{
      {{a, b}, {a, c}, {b, c}}};
  std::array<std::vector<RefArc>, 3> per_pair;
  for (int p = 0; p < 3; ++p) {
    for (const RefArc& e : arcs)
      if ((e.src == pairs[p].first && e.dst == pairs[p].second) ||
          (e.src == pairs[p].second && e.dst == pairs[p].first))
        per_pair[p].push_back(e);
    if (per_pair[p].empty()) return stats;
  }
  stats.is_triad = true;

  bool all_transitive = true, all_balanced = true;
  for (const RefArc& e0 : per_pair[0])
    for (const RefArc& e1 : per_pair[1])
      for (const RefArc& e2 : per_pair[2]) {
        ++stats.semicycle_count;
        std::array<RefArc, 3> sc{e0, e1, e2};
        bool transitive = true;
        for (const RefArc& x : sc)
          for (const RefArc& y : sc)
            if (x.dst == y.src && !(x.src == y.src && x.dst == y.dst))
              if (!has_arc(x.src, y.dst)) transitive = false;
        if (!transitive) all_transitive = false;
        if (e0.sign * e1.sign * e2.sign < 0) all_balanced = false;
      }
  stats.transitive = all_transitive;
  stats.balanced = all_transitive && all_balanced;
  return stats;
}

struct RefMicro {
  std::size_t triads = 0, transitive = 0, balanced = 0, unbalanced = 0;
};

RefMicro ref_micro(const SignedDigraph& g) {
  RefMicro r;
  std::size_t n = g.n();
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b)
      for (NodeIndex c = b + 1; c < n; ++c) {
        RefTriadStats s = ref_triple(g, a, b, c);
        if (!s.is_triad) continue;
        ++r.triads;
        if (!s.transitive) continue;
        ++r.transitive;
        if (s.balanced)
          ++r.balanced;
        else
          ++r.unbalanced;
      }
  return r;
}

bool is_transitive_type(CensusType t) {
  return t == CensusType::t030T || t == CensusType::t120D ||
         t == CensusType::t120U || t == CensusType::t300;
}

// A shape is a set of directed arcs among nodes {0,1,2}; signs enumerated
// exhaustively on top of it.
using Shape = std::vector<std::pair<int, int>>;

SignedDigraph shape_with_signs(const Shape& shape, unsigned mask) {
  std::vector<std::tuple<int, int, int>> arcs;
  for (std::size_t i = 0; i < shape.size(); ++i)
    arcs.emplace_back(shape[i].first, shape[i].second,
                      (mask >> i) & 1 ? -1 : +1);
  return make_graph(3, arcs);
}

}  // namespace

TEST_CASE("classify_triad: one representative per census class") {
  const std::map<std::string, Shape> shapes{
      {"030T", {{0, 1}, {1, 2}, {0, 2}}},
      {"030C", {{0, 1}, {1, 2}, {2, 0}}},
      {"120D", {{0, 1}, {1, 0}, {0, 2}, {1, 2}}},
      {"120U", {{0, 1}, {1, 0}, {2, 0}, {2, 1}}},
      {"120C", {{0, 1}, {1, 0}, {0, 2}, {2, 1}}},
      {"210", {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}}},
      {"300", {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}},
  };
  for (const auto& [name, shape] : shapes) {
    SignedDigraph g = shape_with_signs(shape, 0);
    auto triads = enumerate_triads(g);
    REQUIRE(triads.size() == 1);
    CHECK(to_string(classify_triad(triads[0])) == name);
  }
}

TEST_CASE("census class is sign-independent and matches transitivity") {
  const std::vector<Shape> shapes{
      {{0, 1}, {1, 2}, {0, 2}},                          // 030T
      {{0, 1}, {1, 2}, {2, 0}},                          // 030C
      {{0, 1}, {1, 0}, {0, 2}, {1, 2}},                  // 120D
      {{0, 1}, {1, 0}, {2, 0}, {2, 1}},                  // 120U
      {{0, 1}, {1, 0}, {0, 2}, {2, 1}},                  // 120C
      {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}},          // 210
      {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}},  // 300
  };
  for (const Shape& shape : shapes) {
    CensusType type0 = CensusType::t300;
    for (unsigned mask = 0; mask < (1u << shape.size()); ++mask) {
      SignedDigraph g = shape_with_signs(shape, mask);
      auto triads = enumerate_triads(g);
      REQUIRE(triads.size() == 1);
      const Triad& t = triads[0];
      CensusType type = classify_triad(t);
      if (mask == 0)
        type0 = type;
      else
        CHECK(type == type0);  // signs never change the census class

      RefTriadStats ref = ref_triple(g, 0, 1, 2);
      REQUIRE(ref.is_triad);
      CHECK(triad_transitive(t) == ref.transitive);
      CHECK(is_transitive_type(type) == ref.transitive);
      CHECK(semicycles(t).size() == ref.semicycle_count);
      CHECK(semicycles(t).size() ==
            (1u << static_cast<unsigned>(t.mutual_dyads())));
      if (ref.transitive) CHECK(triad_balanced(t) == ref.balanced);
    }
  }
}

TEST_CASE("semicycle counts per class") {
  auto count_for = [](const Shape& shape) {
    SignedDigraph g = shape_with_signs(shape, 0);
    return semicycles(enumerate_triads(g)[0]).size();
  };
  CHECK(count_for({{0, 1}, {1, 2}, {0, 2}}) == 1);                  // 030T
  CHECK(count_for({{0, 1}, {1, 0}, {2, 0}, {2, 1}}) == 2);          // 120U
  CHECK(count_for({{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}}) == 4);  // 210
  CHECK(count_for(
            {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}) == 8);  // 300
}

TEST_CASE("is_transitive checks closure against the triad's edge set") {
  // Inside a full mutual triad even the cyclic selections close.
  SignedDigraph full = shape_with_signs(
      {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}, 0);
  Triad t = enumerate_triads(full)[0];
  for (const Semicycle& sc : semicycles(t)) CHECK(is_transitive(sc, t));

  // A pure cycle has no closing edges at all.
  SignedDigraph cyc = shape_with_signs({{0, 1}, {1, 2}, {2, 0}}, 0);
  Triad c = enumerate_triads(cyc)[0];
  auto scs = semicycles(c);
  REQUIRE(scs.size() == 1);
  CHECK(!is_transitive(scs[0], c));
  CHECK(!triad_transitive(c));
}

TEST_CASE("semicycle_balanced is the sign product") {
  SignedDigraph g1 = shape_with_signs({{0, 1}, {1, 2}, {0, 2}}, 0b000);
  CHECK(semicycle_balanced(semicycles(enumerate_triads(g1)[0])[0]));
  SignedDigraph g2 = shape_with_signs({{0, 1}, {1, 2}, {0, 2}}, 0b100);
  CHECK(!semicycle_balanced(semicycles(enumerate_triads(g2)[0])[0]));
  SignedDigraph g3 = shape_with_signs({{0, 1}, {1, 2}, {0, 2}}, 0b011);
  CHECK(semicycle_balanced(semicycles(enumerate_triads(g3)[0])[0]));
}

TEST_CASE("enumerate_triads: open triples are not triads") {
  CHECK(enumerate_triads(make_graph(3, {{0, 1, +1}, {1, 2, +1}})).empty());
}

TEST_CASE("enumerate_triads: complete mutual digraph on 4 nodes") {
  std::vector<std::tuple<int, int, int>> arcs;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) arcs.emplace_back(u, v, +1);
  CHECK(enumerate_triads(make_graph(4, arcs)).size() == 4);
}

TEST_CASE("micro_stats: no triads means null T") {
  MicroReport r = micro_stats(make_graph(3, {{0, 1, +1}}));
  CHECK(r.triad_count == 0);
  CHECK(!r.T.has_value());
}

TEST_CASE("micro_stats: mixed example with excluded classes") {
  // One 030T (balanced), one 030C (not transitive, excluded).
  SignedDigraph g = make_graph(
      6, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1},   // 030T, all positive
          {3, 4, +1}, {4, 5, +1}, {5, 3, +1}}); // 030C
  MicroReport r = micro_stats(g);
  CHECK(r.triad_count == 2);
  CHECK(r.transitive_triad_count == 1);
  CHECK(r.balanced_count == 1);
  CHECK(r.unbalanced_count == 0);
  CHECK(*r.T == doctest::Approx(1.0));
  CHECK(r.balanced_fraction_by_type.at(CensusType::t030T) ==
        doctest::Approx(1.0));
  CHECK(r.census.at(CensusType::t030C) == 1);
}

TEST_CASE("micro_stats agrees with the reference implementation") {
  std::mt19937_64 rng(20260819u);
  int graphs = 0;
  for (int n = 4; n <= 9; ++n) {
    for (double p_edge : {0.2, 0.45, 0.7}) {
      for (double p_neg : {0.2, 0.5}) {
        for (int rep = 0; rep < 4; ++rep) {
          SignedDigraph g = random_digraph(rng, n, p_edge, p_neg);
          ++graphs;
          RefMicro ref = ref_micro(g);
          MicroReport r = micro_stats(g);
          CHECK(r.triad_count == ref.triads);
          CHECK(r.transitive_triad_count == ref.transitive);
          CHECK(r.balanced_count == ref.balanced);
          CHECK(r.unbalanced_count == ref.unbalanced);
          if (ref.transitive == 0) {
            CHECK(!r.T.has_value());
          } else {
            REQUIRE(r.T.has_value());
            CHECK(*r.T == doctest::Approx(static_cast<double>(ref.balanced) /
                                          static_cast<double>(ref.transitive)));
            double sum = 0;
            for (const auto& [type, v] : r.balanced_fraction_by_type)
              sum += v;
            CHECK(sum == doctest::Approx(*r.T));
          }

          // Per-triad agreement, including class/transitivity consistency.
          for (const Triad& t : enumerate_triads(g)) {
            RefTriadStats s =
                ref_triple(g, t.nodes[0], t.nodes[1], t.nodes[2]);
            REQUIRE(s.is_triad);
            CHECK(triad_transitive(t) == s.transitive);
            CHECK(is_transitive_type(classify_triad(t)) == s.transitive);
            if (s.transitive) CHECK(triad_balanced(t) == s.balanced);
          }
        }
      }
    }
  }
  CHECK(graphs == 144);
}

TEST_CASE("micro_stats is invariant under switching") {
  std::mt19937_64 rng(7u);
  for (int rep = 0; rep < 10; ++rep) {
    SignedDigraph g = random_digraph(rng, 8, 0.5, 0.4);
    std::vector<NodeIndex> subset;
    for (NodeIndex i = 0; i < g.n(); ++i)
      if (rng() & 1) subset.push_back(i);
    MicroReport a = micro_stats(g);
    MicroReport b = micro_stats(switch_cut_indices(g, subset));
    CHECK(a.transitive_triad_count == b.transitive_triad_count);
    CHECK(a.balanced_count == b.balanced_count);
    CHECK(a.unbalanced_count == b.unbalanced_count);
  }
}
