#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sgbalance/graph.hpp"

using namespace sgb;
using sgbtest::make_graph;

TEST_CASE("signs are strictly plus or minus") {
  CHECK(sign_from_int(1) == Sign::plus);
  CHECK(sign_from_int(-1) == Sign::minus);
  CHECK_THROWS_AS(sign_from_int(0), InvalidSign);
  CHECK_THROWS_AS(sign_from_int(2), InvalidSign);
  CHECK_THROWS_AS(sign_from_int(-7), InvalidSign);
}

TEST_CASE("node ordering: numeric labels compare by value") {
  CHECK(node_id_less("2", "10"));
  CHECK(!node_id_less("10", "2"));
  CHECK(node_id_less("9", "11"));
  CHECK(node_id_less("abc", "abd"));
  CHECK(!node_id_less("a", "a"));
}

TEST_CASE("build_graph: reciprocal mixed dyad") {
  SignedDigraph g = build_graph({{"a", "b", +1}, {"b", "a", -1}});
  CHECK(g.n() == 2);
  CHECK(g.m() == 2);
  CHECK(g.m_plus() == 1);
  CHECK(g.m_minus() == 1);
}

TEST_CASE("build_graph: identical duplicates deduplicate") {
  SignedDigraph g = build_graph({{"a", "b", +1}, {"a", "b", +1}});
  CHECK(g.m() == 1);
}

TEST_CASE("build_graph: self-loop rejected") {
  CHECK_THROWS_AS(build_graph({{"a", "a", +1}}), SelfLoop);
}

TEST_CASE("build_graph: conflicting signs on one ordered pair rejected") {
  CHECK_THROWS_AS(build_graph({{"a", "b", +1}, {"a", "b", -1}}),
                  ConflictingSign);
}

TEST_CASE("build_graph: zero sign rejected") {
  CHECK_THROWS_AS(build_graph({{"a", "b", 0}}), InvalidSign);
}

TEST_CASE("graph accessors") {
  SignedDigraph g = make_graph(3, {{0, 1, +1}, {1, 0, -1}, {1, 2, -1}});
  CHECK(g.edge_sign(0, 1) == Sign::plus);
  CHECK(g.edge_sign(1, 0) == Sign::minus);
  CHECK(!g.edge_sign(0, 2).has_value());
  CHECK(g.degree(1) == 3);
  CHECK(g.und_neighbors(1) == std::vector<NodeIndex>{0, 2});
  CHECK(g.und_pair_count() == 2);
  CHECK(g.require_index("2") == 2);
  CHECK_THROWS_AS(g.require_index("missing"), UnknownNode);
}

TEST_CASE("summary: degenerate single node") {
  GraphSummary s = summary(make_graph(1, {}));
  CHECK(s.n == 1);
  CHECK(s.m == 0);
  CHECK(!s.density.has_value());
}

TEST_CASE("summary: counts and density") {
  SignedDigraph g = make_graph(3, {{0, 1, +1}, {1, 0, -1}, {1, 2, -1}});
  GraphSummary s = summary(g);
  CHECK(s.n == 3);
  CHECK(s.m == 3);
  CHECK(s.m_plus == 1);
  CHECK(s.m_minus == 2);
  CHECK(*s.density == doctest::Approx(0.5));
}

TEST_CASE("partition canonicalization") {
  Partition p(std::vector<std::uint8_t>{1, 0, 1});
  CHECK(!p.is_canonical());
  Partition c = p.canonical();
  CHECK(c.is_canonical());
  CHECK(c.sides() == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(c.canonical() == c);                    // idempotent
  CHECK(p.complement().canonical() == c);       // complement-invariant
  CHECK(p.complement().complement() == p);
  CHECK(p.members(1) == std::vector<NodeIndex>{0, 2});
}

TEST_CASE("partition_from_sides requires exact cover") {
  SignedDigraph g = make_graph(2, {{0, 1, +1}});
  Partition p = partition_from_sides(g, {{"0", 0}, {"1", 1}});
  CHECK(p.side(0) == 0);
  CHECK(p.side(1) == 1);
  CHECK_THROWS_AS(partition_from_sides(g, {{"0", 0}}), UnknownNode);
  CHECK_THROWS_AS(partition_from_sides(g, {{"0", 0}, {"zz", 1}}),
                  UnknownNode);
}

TEST_CASE("flatten: single layer is identity") {
  MultilayerNetwork ml;
  ml.layers.emplace_back("only", make_graph(3, {{0, 1, +1}, {2, 1, -1}}));
  CHECK(flatten(ml) == ml.layers.front().second);
}

TEST_CASE("flatten: same-sign duplicates merge, unions otherwise") {
  MultilayerNetwork ml;
  ml.layers.emplace_back("a", build_graph({{"x", "y", +1}, {"y", "z", -1}}));
  ml.layers.emplace_back("b", build_graph({{"x", "y", +1}, {"z", "x", +1}}));
  SignedDigraph flat = flatten(ml);
  CHECK(flat.n() == 3);
  CHECK(flat.m() == 3);
  CHECK(flat.m_plus() == 2);
}

TEST_CASE("flatten: conflicting signs follow the policy") {
  MultilayerNetwork ml;
  ml.layers.emplace_back("a", build_graph({{"x", "y", +1}}));
  ml.layers.emplace_back("b", build_graph({{"x", "y", -1}}));
  CHECK_THROWS_AS(flatten(ml), ConflictingSign);
  SignedDigraph neg = flatten(ml, ConflictPolicy::keep_negative);
  CHECK(neg.m() == 1);
  CHECK(neg.m_minus() == 1);
  SignedDigraph pos = flatten(ml, ConflictPolicy::keep_positive);
  CHECK(pos.m() == 1);
  CHECK(pos.m_plus() == 1);
}

TEST_CASE("switch_cut: empty and full subsets are identities") {
  SignedDigraph g = make_graph(4, {{0, 1, +1}, {1, 2, -1}, {3, 0, -1}});
  CHECK(switch_cut(g, {}) == g);
  CHECK(switch_cut(g, {"0", "1", "2", "3"}) == g);
  CHECK_THROWS_AS(switch_cut(g, {"nope"}), UnknownNode);
}

TEST_CASE("switch_cut negates exactly the crossing edges") {
  SignedDigraph g = build_graph({{"a", "b", +1}, {"b", "c", -1}});
  SignedDigraph s = switch_cut(g, {"b"});
  CHECK(s.edge_sign(s.require_index("a"), s.require_index("b")) ==
        Sign::minus);
  CHECK(s.edge_sign(s.require_index("b"), s.require_index("c")) ==
        Sign::plus);
  CHECK(switch_cut(s, {"b"}) == g);  // involution
}

TEST_CASE("und_components: ascending members, ordered by smallest member") {
  SignedDigraph g =
      make_graph(6, {{1, 0, +1}, {2, 1, -1}, {4, 5, +1}});
  auto comps = und_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<NodeIndex>{0, 1, 2});
  CHECK(comps[1] == std::vector<NodeIndex>{3});
  CHECK(comps[2] == std::vector<NodeIndex>{4, 5});
}

TEST_CASE("build_graph_indexed validates indices") {
  std::vector<NodeId> nodes{"0", "1"};
  CHECK_THROWS_AS(
      build_graph_indexed(nodes, {{0u, 0u, Sign::plus}}), SelfLoop);
  CHECK_THROWS_AS(
      build_graph_indexed(nodes, {{0u, 5u, Sign::plus}}), UnknownNode);
  CHECK_THROWS_AS(
      build_graph_indexed(nodes,
                          {{0u, 1u, Sign::plus}, {0u, 1u, Sign::plus}}),
      ConflictingSign);
}

TEST_CASE("nodes with numeric ids order numerically in the graph") {
  SignedDigraph g = build_graph({{"10", "2", +1}});
  CHECK(g.node(0) == "2");
  CHECK(g.node(1) == "10");
}
