#include "sgbalance/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace sgb {

Sign sign_from_int(long long v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw InvalidSign("sign must be +1 or -1, got " + std::to_string(v));
}

std::string node_order_key(const NodeId& id) {
  if (id.empty()) return id;
  bool all_digits = true;
  for (char c : id) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      all_digits = false;
      break;
    }
  }
  if (!all_digits) return id;
  constexpr std::size_t kWidth = 24;
  if (id.size() >= kWidth) return id;
  return std::string(kWidth - id.size(), '0') + id;
}

bool node_id_less(const NodeId& a, const NodeId& b) {
  auto ka = node_order_key(a);
  auto kb = node_order_key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

std::optional<NodeIndex> SignedDigraph::index_of(const NodeId& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id, node_id_less);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex SignedDigraph::require_index(const NodeId& id) const {
  auto idx = index_of(id);
  if (!idx) throw UnknownNode("unknown node: " + id);
  return *idx;
}

std::optional<Sign> SignedDigraph::edge_sign(NodeIndex u, NodeIndex v) const {
  const auto& adj = out_.at(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const std::pair<NodeIndex, Sign>& e, NodeIndex x) { return e.first < x; });
  if (it == adj.end() || it->first != v) return std::nullopt;
  return it->second;
}

SignedDigraph build_graph(const std::vector<EdgeTriple>& triples) {
  std::vector<NodeId> nodes;
  nodes.reserve(triples.size() * 2);
  for (const auto& t : triples) {
    nodes.push_back(t.source);
    nodes.push_back(t.target);
  }
  std::sort(nodes.begin(), nodes.end(), node_id_less);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto index_of = [&](const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id, node_id_less);
    return static_cast<NodeIndex>(it - nodes.begin());
  };

  std::map<std::pair<NodeIndex, NodeIndex>, Sign> seen;
  for (const auto& t : triples) {
    Sign s = sign_from_int(t.sign);
    if (t.source == t.target)
      throw SelfLoop("self-loop on node " + t.source);
    NodeIndex u = index_of(t.source), v = index_of(t.target);
    auto [it, inserted] = seen.emplace(std::make_pair(u, v), s);
    if (!inserted && it->second != s)
      throw ConflictingSign("ordered pair (" + t.source + "," + t.target +
                            ") carries both signs");
  }
  std::vector<Edge> edges;
  edges.reserve(seen.size());
  for (const auto& [key, s] : seen) edges.push_back({key.first, key.second, s});
  return build_graph_indexed(std::move(nodes), std::move(edges));
}

SignedDigraph build_graph_indexed(std::vector<NodeId> nodes,
                                  std::vector<Edge> edges) {
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const Edge& e : edges) {
    if (e.src == e.dst) throw SelfLoop("self-loop on node index " +
                                       std::to_string(e.src));
    if (e.src >= nodes.size() || e.dst >= nodes.size())
      throw UnknownNode("edge index out of range");
    if (!seen.emplace(e.src, e.dst).second)
      throw ConflictingSign("duplicate ordered pair in indexed build");
  }

  SignedDigraph g;
  g.nodes_ = std::move(nodes);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  g.edges_ = std::move(edges);
  const std::size_t n = g.nodes_.size();
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  g.und_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.out_[e.src].emplace_back(e.dst, e.sign);
    g.in_[e.dst].emplace_back(e.src, e.sign);
    if (e.sign == Sign::plus) ++g.m_plus_;
  }
  for (auto& v : g.in_) std::sort(v.begin(), v.end());
  // undirected projection
  for (NodeIndex u = 0; u < n; ++u) {
    auto& nb = g.und_[u];
    for (const auto& [v, s] : g.out_[u]) nb.push_back(v);
    for (const auto& [v, s] : g.in_[u]) nb.push_back(v);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  std::size_t total = 0;
  for (const auto& nb : g.und_) total += nb.size();
  g.und_pairs_ = total / 2;
  return g;
}

Partition::Partition(std::vector<std::uint8_t> sides) : side_(std::move(sides)) {
  for (auto s : side_)
    if (s > 1) throw Error("partition sides must be 0 or 1");
}

Partition Partition::all_zero(std::size_t n) {
  return Partition(std::vector<std::uint8_t>(n, 0));
}

Partition Partition::complement() const {
  std::vector<std::uint8_t> flipped(side_.size());
  for (std::size_t i = 0; i < side_.size(); ++i) flipped[i] = 1 - side_[i];
  return Partition(std::move(flipped));
}

Partition Partition::canonical() const {
  if (is_canonical()) return *this;
  return complement();
}

std::vector<NodeIndex> Partition::members(std::uint8_t side) const {
  std::vector<NodeIndex> out;
  for (std::size_t i = 0; i < side_.size(); ++i)
    if (side_[i] == side) out.push_back(static_cast<NodeIndex>(i));
  return out;
}

Partition partition_from_sides(
    const SignedDigraph& g,
    const std::vector<std::pair<NodeId, int>>& assignment) {
  std::vector<std::uint8_t> sides(g.n(), 2);
  for (const auto& [id, s] : assignment) {
    if (s != 0 && s != 1)
      throw Error("partition side must be 0 or 1 for node " + id);
    sides.at(g.require_index(id)) = static_cast<std::uint8_t>(s);
  }
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (sides[i] == 2)
      throw UnknownNode("partition misses node " + g.node(static_cast<NodeIndex>(i)));
  return Partition(std::move(sides));
}

GraphSummary summary(const SignedDigraph& g) {
  GraphSummary s;
  s.n = g.n();
  s.m = g.m();
  s.m_plus = g.m_plus();
  s.m_minus = g.m_minus();
  if (s.n >= 2)
    s.density = static_cast<double>(s.m) /
                (static_cast<double>(s.n) * static_cast<double>(s.n - 1));
  return s;
}

SignedDigraph flatten(const MultilayerNetwork& ml, ConflictPolicy policy) {
  if (ml.layers.empty()) throw Error("multilayer network has no layers");
  std::vector<NodeId> nodes;
  for (const auto& [name, layer] : ml.layers)
    for (const auto& id : layer.nodes()) nodes.push_back(id);
  std::sort(nodes.begin(), nodes.end(), node_id_less);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto index_of = [&](const NodeId& id) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id, node_id_less);
    return static_cast<NodeIndex>(it - nodes.begin());
  };

  std::map<std::pair<NodeIndex, NodeIndex>, Sign> merged;
  for (const auto& [name, layer] : ml.layers) {
    for (const Edge& e : layer.edges()) {
      NodeIndex u = index_of(layer.node(e.src));
      NodeIndex v = index_of(layer.node(e.dst));
      auto [it, inserted] = merged.emplace(std::make_pair(u, v), e.sign);
      if (!inserted && it->second != e.sign) {
        switch (policy) {
          case ConflictPolicy::error:
            throw ConflictingSign("layers disagree on edge (" +
                                  layer.node(e.src) + "," + layer.node(e.dst) +
                                  ")");
          case ConflictPolicy::keep_negative:
            it->second = Sign::minus;
            break;
          case ConflictPolicy::keep_positive:
            it->second = Sign::plus;
            break;
        }
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, s] : merged) edges.push_back({key.first, key.second, s});
  return build_graph_indexed(std::move(nodes), std::move(edges));
}

SignedDigraph switch_cut_indices(const SignedDigraph& g,
                                 const std::vector<NodeIndex>& subset) {
  std::vector<std::uint8_t> in_set(g.n(), 0);
  for (NodeIndex i : subset) {
    if (i >= g.n()) throw UnknownNode("switch subset index out of range");
    in_set[i] = 1;
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (in_set[e.src] != in_set[e.dst])
      e.sign = (e.sign == Sign::plus) ? Sign::minus : Sign::plus;
  return build_graph_indexed(g.nodes(), std::move(edges));
}

SignedDigraph switch_cut(const SignedDigraph& g,
                         const std::vector<NodeId>& subset) {
  std::vector<NodeIndex> idx;
  idx.reserve(subset.size());
  for (const auto& id : subset) idx.push_back(g.require_index(id));
  return switch_cut_indices(g, idx);
}

std::vector<std::vector<NodeIndex>> und_components(const SignedDigraph& g) {
  const std::size_t n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<NodeIndex>> components;
  std::vector<NodeIndex> stack;
  for (NodeIndex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(components.size());
    components.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      components[id].push_back(u);
      for (NodeIndex v : g.und_neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

}  // namespace sgb
