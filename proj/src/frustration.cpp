#include "sgbalance/frustration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <random>

#include "sgbalance/micro.hpp"

namespace sgb {

long frustration_count(const SignedDigraph& g, const Partition& p) {
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  long count = 0;
  for (const Edge& e : g.edges()) {
    bool same = p.side(e.src) == p.side(e.dst);
    if (e.sign == Sign::plus ? !same : same) ++count;
  }
  return count;
}

std::vector<EdgeClass> classify_edges(const SignedDigraph& g,
                                      const Partition& p) {
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  std::vector<EdgeClass> out;
  out.reserve(g.m());
  for (const Edge& e : g.edges()) {
    bool same = p.side(e.src) == p.side(e.dst);
    bool positive = e.sign == Sign::plus;
    EdgeClass ec;
    ec.edge = e;
    ec.situation = same ? Situation::internal : Situation::external;
    ec.frustrated = positive ? !same : same;
    if (same)
      ec.t = positive ? 3 : 1;
    else
      ec.t = positive ? -1 : -3;
    out.push_back(ec);
  }
  return out;
}

namespace {

std::optional<std::size_t> edge_index(const SignedDigraph& g, NodeIndex u,
                                      NodeIndex v) {
  const auto& es = g.edges();
  auto it = std::lower_bound(
      es.begin(), es.end(), std::make_pair(u, v),
      [](const Edge& e, const std::pair<NodeIndex, NodeIndex>& key) {
        return std::tie(e.src, e.dst) < std::tie(key.first, key.second);
      });
  if (it == es.end() || it->src != u || it->dst != v) return std::nullopt;
  return static_cast<std::size_t>(it - es.begin());
}

// Edge-disjoint structures that each force one frustrated edge under every
// partition: reciprocal dyads carrying both signs, then greedily packed
// sign-unbalanced one-edge-per-pair triangles over the remaining edges.
struct Packing {
  std::vector<std::pair<NodeIndex, NodeIndex>> mixed_pairs;   // u < v
  std::vector<std::array<NodeIndex, 3>> triangles;            // ascending
  long value() const {
    return static_cast<long>(mixed_pairs.size() + triangles.size());
  }
};

Packing compute_packing(const SignedDigraph& g) {
  Packing pk;
  std::vector<char> consumed(g.m(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.src >= e.dst) continue;
    auto rev = edge_index(g, e.dst, e.src);
    if (!rev) continue;
    if (g.edges()[*rev].sign != e.sign) {
      pk.mixed_pairs.emplace_back(e.src, e.dst);
      consumed[i] = consumed[*rev] = 1;
    }
  }
  for_each_triad(g, [&](const Triad& t) {
    static constexpr int lo[3] = {0, 0, 1};
    static constexpr int hi[3] = {1, 2, 2};
    // available edge choices per pair: (edge index, sign), low->high first
    std::array<std::array<std::pair<std::size_t, int>, 2>, 3> choice;
    std::array<int, 3> nchoice = {0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      NodeIndex a = t.nodes[lo[k]], b = t.nodes[hi[k]];
      if (t.pairs[k].fwd) {
        auto idx = *edge_index(g, a, b);
        if (!consumed[idx])
          choice[k][nchoice[k]++] = {idx, to_int(t.pairs[k].sf)};
      }
      if (t.pairs[k].rev) {
        auto idx = *edge_index(g, b, a);
        if (!consumed[idx])
          choice[k][nchoice[k]++] = {idx, to_int(t.pairs[k].sr)};
      }
    }
    if (nchoice[0] == 0 || nchoice[1] == 0 || nchoice[2] == 0) return;
    for (int i = 0; i < nchoice[0]; ++i)
      for (int j = 0; j < nchoice[1]; ++j)
        for (int k = 0; k < nchoice[2]; ++k) {
          if (choice[0][i].second * choice[1][j].second * choice[2][k].second <
              0) {
            consumed[choice[0][i].first] = 1;
            consumed[choice[1][j].first] = 1;
            consumed[choice[2][k].first] = 1;
            pk.triangles.push_back(t.nodes);
            return;
          }
        }
  });
  return pk;
}

}  // namespace

long lower_bound(const SignedDigraph& g) { return compute_packing(g).value(); }

namespace {

// Steepest-descent hill climbing on single-node flips. Flipping a node
// toggles the frustration of every incident edge, so the gain of flipping v
// is 2*frustrated_incident(v) - degree(v).
long descend(const SignedDigraph& g, std::vector<std::uint8_t>& side) {
  const std::size_t n = g.n();
  std::vector<long> f_inc(n, 0);
  long total = 0;
  for (const Edge& e : g.edges()) {
    bool same = side[e.src] == side[e.dst];
    if (e.sign == Sign::plus ? !same : same) {
      ++total;
      ++f_inc[e.src];
      ++f_inc[e.dst];
    }
  }
  for (;;) {
    long best_gain = 0;
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      long gain = 2 * f_inc[v] - static_cast<long>(g.degree(v));
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best == n) return total;
    NodeIndex v = static_cast<NodeIndex>(best);
    side[v] = 1 - side[v];
    total -= best_gain;
    auto touch = [&](const Edge& e, NodeIndex other) {
      bool same = side[e.src] == side[e.dst];
      bool now = (e.sign == Sign::plus ? !same : same);
      // edge state toggled by the flip
      if (now) {
        ++f_inc[other];
        ++f_inc[v];
      } else {
        --f_inc[other];
        --f_inc[v];
      }
    };
    f_inc[v] = 0;
    for (const auto& [w, s] : g.out(v)) touch({v, w, s}, w);
    for (const auto& [w, s] : g.in(v)) touch({w, v, s}, w);
  }
}

}  // namespace

Bounds local_search(const SignedDigraph& g, const SolveOptions& opts) {
  const std::size_t n = g.n();
  Bounds b;
  b.lower = 0;
  std::vector<std::uint8_t> best(n, 0), cur(n, 0);
  long best_count = descend(g, cur);
  best = cur;
  std::mt19937_64 rng(opts.seed);
  for (int r = 0; r < opts.restarts; ++r) {
    std::uint64_t bits = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v % 64 == 0) bits = rng();
      cur[v] = static_cast<std::uint8_t>((bits >> (v % 64)) & 1);
    }
    long count = descend(g, cur);
    if (count < best_count) {
      best_count = count;
      best = cur;
    }
  }
  b.upper = best_count;
  b.upper_partition = Partition(std::move(best)).canonical();
  return b;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchBudget {
  std::uint64_t node_budget;
  Clock::time_point deadline;
  std::uint64_t explored = 0;
  bool exhausted = false;

  bool charge() {
    if (exhausted) return false;
    ++explored;
    if (explored > node_budget ||
        (explored % 4096 == 0 && Clock::now() > deadline)) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

// Branch-and-bound over side assignments of one connected component.
// Bound = frustration among assigned pairs
//       + per-unassigned-node cheapest attachment to the assigned set
//       + fully-unassigned mixed dyads
//       + fully-unassigned packed unbalanced triangles.
class BBSolver {
 public:
  BBSolver(const SignedDigraph& g, const Packing& pk, SearchBudget* budget)
      : g_(g), budget_(budget), k_(g.n()) {
    adj_.resize(k_);
    for (const Edge& e : g.edges()) {
      int cs = e.sign == Sign::minus ? 1 : 0;
      int cd = e.sign == Sign::plus ? 1 : 0;
      merge_pair(e.src, e.dst, cs, cd);
      merge_pair(e.dst, e.src, cs, cd);
    }
    mixed_partners_.resize(k_);
    for (auto [u, v] : pk.mixed_pairs) {
      mixed_partners_[u].push_back(v);
      mixed_partners_[v].push_back(u);
    }
    tri_of_node_.resize(k_);
    for (std::size_t t = 0; t < pk.triangles.size(); ++t)
      for (NodeIndex v : pk.triangles[t])
        tri_of_node_[v].push_back(static_cast<int>(t));
    tri_unassigned_.assign(pk.triangles.size(), 3);

    // branch order: anchor (node 0, the component's smallest) first, the
    // rest by descending degree, index ascending on ties
    order_.resize(k_);
    for (int i = 0; i < k_; ++i) order_[i] = i;
    std::sort(order_.begin() + 1, order_.end(), [&](int a, int b) {
      auto da = g_.degree(a), db = g_.degree(b);
      if (da != db) return da > db;
      return a < b;
    });

    side_.assign(k_, -1);
    c0_.assign(k_, 0);
    c1_.assign(k_, 0);
    mixed_uu_ = static_cast<long>(pk.mixed_pairs.size());
    tri_units_ = static_cast<long>(pk.triangles.size());
  }

  long root_bound() const { return mixed_uu_ + tri_units_; }

  // Find the minimum, starting from a known incumbent. Returns the best
  // value found (== incumbent if nothing better); best assignment in
  // `best_out` when improved. Completes the proof unless the budget runs
  // out (budget_->exhausted).
  long minimize(long incumbent, const std::vector<std::uint8_t>& warm,
                std::vector<std::uint8_t>* best_out) {
    incumbent_ = incumbent;
    best_ = warm;
    mode_ = Mode::improve;
    target_ = -1;
    dfs(0);
    *best_out = best_;
    return incumbent_;
  }

  // Is there a completion with cost == target consistent with `forced`
  // (list of (node, side))? Fills `leaf_out` with the first one found.
  bool feasible(long target, const std::vector<std::pair<int, int>>& forced,
                std::vector<std::uint8_t>* leaf_out) {
    mode_ = Mode::feasible;
    target_ = target;
    found_ = false;
    for (auto [v, s] : forced) assign(v, s);
    dfs(0);
    for (auto it = forced.rbegin(); it != forced.rend(); ++it)
      unassign(it->first, it->second);
    if (found_) *leaf_out = leaf_;
    return found_;
  }

  // Collect every anchored assignment with cost == target, up to cap+1.
  void enumerate(long target, std::size_t cap,
                 std::vector<std::vector<std::uint8_t>>* out) {
    mode_ = Mode::enumerate;
    target_ = target;
    cap_ = cap;
    collected_ = out;
    dfs(0);
  }

 private:
  enum class Mode { improve, feasible, enumerate };

  void merge_pair(NodeIndex a, NodeIndex b, int cs, int cd) {
    for (auto& pc : adj_[a]) {
      if (pc.nbr == b) {
        pc.cs += cs;
        pc.cd += cd;
        return;
      }
    }
    adj_[a].push_back({b, cs, cd});
  }

  void assign(int u, int s) {
    for (const auto& pc : adj_[u]) {
      int v = static_cast<int>(pc.nbr);
      if (side_[v] < 0) {
        long old = std::min(c0_[v], c1_[v]);
        if (s == 0) {
          c0_[v] += pc.cs;
          c1_[v] += pc.cd;
        } else {
          c0_[v] += pc.cd;
          c1_[v] += pc.cs;
        }
        sum_min_ += std::min(c0_[v], c1_[v]) - old;
      } else {
        f_ += (side_[v] == s) ? pc.cs : pc.cd;
      }
    }
    sum_min_ -= std::min(c0_[u], c1_[u]);
    for (int w : mixed_partners_[u])
      if (side_[w] < 0) --mixed_uu_;
    for (int t : tri_of_node_[u])
      if (--tri_unassigned_[t] == 2) --tri_units_;
    side_[u] = static_cast<std::int8_t>(s);
  }

  void unassign(int u, int s) {
    side_[u] = -1;
    for (int t : tri_of_node_[u])
      if (++tri_unassigned_[t] == 3) ++tri_units_;
    for (int w : mixed_partners_[u])
      if (side_[w] < 0) ++mixed_uu_;
    sum_min_ += std::min(c0_[u], c1_[u]);
    for (const auto& pc : adj_[u]) {
      int v = static_cast<int>(pc.nbr);
      if (side_[v] < 0) {
        long old = std::min(c0_[v], c1_[v]);
        if (s == 0) {
          c0_[v] -= pc.cs;
          c1_[v] -= pc.cd;
        } else {
          c0_[v] -= pc.cd;
          c1_[v] -= pc.cs;
        }
        sum_min_ += std::min(c0_[v], c1_[v]) - old;
      } else {
        f_ -= (side_[v] == s) ? pc.cs : pc.cd;
      }
    }
  }

  long bound() const { return f_ + sum_min_ + mixed_uu_ + tri_units_; }

  bool pruned() const {
    if (mode_ == Mode::improve) return bound() >= incumbent_;
    return bound() > target_;
  }

  bool done() const {
    if (budget_->exhausted) return true;
    if (mode_ == Mode::feasible && found_) return true;
    if (mode_ == Mode::enumerate && collected_->size() > cap_) return true;
    return false;
  }

  void at_leaf() {
    switch (mode_) {
      case Mode::improve:
        if (f_ < incumbent_) {
          incumbent_ = f_;
          best_.assign(side_.begin(), side_.end());
        }
        break;
      case Mode::feasible:
        if (f_ == target_) {
          found_ = true;
          leaf_.assign(side_.begin(), side_.end());
        }
        break;
      case Mode::enumerate:
        if (f_ == target_)
          collected_->emplace_back(side_.begin(), side_.end());
        break;
    }
  }

  // Next not-yet-assigned position in branch order at or after `depth`.
  int next_depth(int depth) const {
    while (depth < k_ && side_[order_[depth]] >= 0) ++depth;
    return depth;
  }

  void dfs(int depth) {
    depth = next_depth(depth);
    if (depth >= k_) {
      at_leaf();
      return;
    }
    if (done() || pruned()) return;
    if (!budget_->charge()) return;
    int u = order_[depth];
    int first;
    if (depth == 0)
      first = 0;  // symmetry anchor: component's smallest node on side 0
    else
      first = (c0_[u] <= c1_[u]) ? 0 : 1;
    for (int pass = 0; pass < 2; ++pass) {
      int s = pass == 0 ? first : 1 - first;
      assign(u, s);
      if (!pruned() && !done()) dfs(depth + 1);
      unassign(u, s);
      if (done()) return;
      if (depth == 0) return;  // complement never explored
    }
  }

  const SignedDigraph& g_;
  SearchBudget* budget_;
  int k_;

  struct PairCost {
    NodeIndex nbr;
    int cs;  // frustrated edges in the pair if endpoints share a side
    int cd;  // ... if endpoints split
  };
  std::vector<std::vector<PairCost>> adj_;
  std::vector<std::vector<int>> mixed_partners_;
  std::vector<std::vector<int>> tri_of_node_;
  std::vector<int> tri_unassigned_;
  std::vector<int> order_;

  std::vector<std::int8_t> side_;
  std::vector<long> c0_, c1_;
  long f_ = 0;
  long sum_min_ = 0;
  long mixed_uu_ = 0;
  long tri_units_ = 0;

  Mode mode_ = Mode::improve;
  long incumbent_ = 0;
  long target_ = 0;
  bool found_ = false;
  std::size_t cap_ = 0;
  std::vector<std::uint8_t> best_, leaf_;
  std::vector<std::vector<std::uint8_t>>* collected_ = nullptr;
};

SignedDigraph component_subgraph(const SignedDigraph& g,
                                 const std::vector<NodeIndex>& members) {
  std::vector<NodeId> nodes;
  nodes.reserve(members.size());
  std::vector<NodeIndex> local(g.n(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    nodes.push_back(g.node(members[i]));
    local[members[i]] = static_cast<NodeIndex>(i);
  }
  std::vector<Edge> edges;
  for (NodeIndex u : members)
    for (const auto& [v, s] : g.out(u))
      edges.push_back({local[u], local[v], s});
  return build_graph_indexed(std::move(nodes), std::move(edges));
}

struct ComponentResult {
  std::vector<NodeIndex> members;
  long lower = 0;
  long upper = 0;
  bool proven = false;
  std::vector<std::uint8_t> assignment;  // anchored: first member on side 0
  std::vector<std::vector<std::uint8_t>> optima;  // filled when enumerating
  bool optima_truncated = false;
};

// Lexicographically smallest optimal assignment (anchored), grown from a
// known optimal one by greedy prefix fixing in index order.
void refine_lex_min(BBSolver& solver, long L,
                    std::vector<std::uint8_t>& work, SearchBudget* budget) {
  const int k = static_cast<int>(work.size());
  std::vector<std::pair<int, int>> forced;
  for (int i = 1; i < k && !budget->exhausted; ++i) {
    if (work[i] == 0) continue;
    forced.clear();
    forced.reserve(i + 1);
    for (int j = 0; j < i; ++j) forced.emplace_back(j, work[j]);
    forced.emplace_back(i, 0);
    std::vector<std::uint8_t> leaf;
    if (solver.feasible(L, forced, &leaf)) work = leaf;
  }
}

ComponentResult solve_component(const SignedDigraph& sub,
                                const SolveOptions& opts,
                                SearchBudget* budget, bool enumerate,
                                std::size_t cap) {
  ComponentResult res;
  const std::size_t k = sub.n();
  if (k <= 1 || sub.m() == 0) {
    res.lower = res.upper = 0;
    res.proven = true;
    res.assignment.assign(k, 0);
    if (enumerate) res.optima.push_back(res.assignment);
    return res;
  }
  Packing pk = compute_packing(sub);
  Bounds warm = local_search(sub, opts);
  std::vector<std::uint8_t> assignment = warm.upper_partition.sides();

  BBSolver solver(sub, pk, budget);
  long L = warm.upper;
  bool proven = false;
  if (pk.value() == warm.upper) {
    proven = true;  // bounds met without search
  } else {
    L = solver.minimize(warm.upper, assignment, &assignment);
    proven = !budget->exhausted;
  }
  res.lower = proven ? L : std::max<long>(pk.value(), 0);
  res.upper = L;
  res.proven = proven;
  if (proven && !budget->exhausted) refine_lex_min(solver, L, assignment, budget);
  // anchored: canonicalize within the component
  if (!assignment.empty() && assignment[0] == 1)
    for (auto& s : assignment) s = 1 - s;
  res.assignment = std::move(assignment);
  if (enumerate && res.proven) {
    if (k == 1) {
      res.optima.push_back(res.assignment);
    } else {
      solver.enumerate(L, cap, &res.optima);
      if (budget->exhausted) {
        res.optima_truncated = true;
      } else if (res.optima.size() > cap) {
        res.optima.resize(cap);
        res.optima_truncated = true;
      }
      std::sort(res.optima.begin(), res.optima.end());
    }
  }
  return res;
}

struct ComponentPlan {
  std::vector<ComponentResult> comps;
  std::uint64_t explored = 0;
  bool budget_exhausted = false;
};

ComponentPlan solve_components(const SignedDigraph& g, const SolveOptions& opts,
                               bool enumerate, std::size_t cap) {
  ComponentPlan plan;
  SearchBudget budget;
  budget.node_budget = opts.node_budget;
  budget.deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opts.time_budget_s));
  auto comps = und_components(g);
  for (const auto& members : comps) {
    SignedDigraph sub = component_subgraph(g, members);
    ComponentResult r = solve_component(sub, opts, &budget, enumerate, cap);
    r.members = members;
    plan.comps.push_back(std::move(r));
  }
  plan.explored = budget.explored;
  plan.budget_exhausted = budget.exhausted;
  return plan;
}

Partition assemble_partition(std::size_t n,
                             const std::vector<ComponentResult>& comps) {
  std::vector<std::uint8_t> sides(n, 0);
  for (const auto& c : comps)
    for (std::size_t i = 0; i < c.members.size(); ++i)
      sides[c.members[i]] = c.assignment[i];
  return Partition(std::move(sides)).canonical();
}

bool budgets_at_defaults(const SolveOptions& opts) {
  SolveOptions defaults;
  return opts.node_budget <= defaults.node_budget &&
         opts.time_budget_s <= defaults.time_budget_s;
}

}  // namespace

SolveResult solve_exact(const SignedDigraph& g, const SolveOptions& opts) {
  SolveResult result;
  if (g.n() == 0) {
    result.proven = true;
    result.partition = Partition::all_zero(0);
    if (opts.enumerate_all)
      result.all_optima = std::vector<Partition>{Partition::all_zero(0)};
    return result;
  }
  if (g.m() > 10000 && budgets_at_defaults(opts)) {
    // large-network mode: bounds only
    long lb = lower_bound(g);
    Bounds warm = local_search(g, opts);
    result.L = warm.upper;
    result.partition = warm.upper_partition;
    result.proven = (lb == warm.upper);
    result.bounds = {lb, warm.upper, warm.upper_partition};
    return result;
  }
  ComponentPlan plan =
      solve_components(g, opts, opts.enumerate_all, opts.enumeration_cap);
  long lower = 0, upper = 0;
  bool proven = true;
  for (const auto& c : plan.comps) {
    lower += c.lower;
    upper += c.upper;
    proven = proven && c.proven;
  }
  result.L = upper;
  result.partition = assemble_partition(g.n(), plan.comps);
  result.proven = proven;
  result.explored_nodes = plan.explored;
  result.bounds = {lower, upper, result.partition};
  if (opts.enumerate_all && proven) {
    OptimaResult opt;
    bool truncated = false;
    // cartesian product of per-component optima with orientation freedom
    // for every component except the one holding node 0
    std::vector<Partition> out;
    std::vector<std::uint8_t> sides(g.n(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
      if (out.size() > opts.enumeration_cap) return;
      if (ci == plan.comps.size()) {
        out.emplace_back(Partition(sides));
        return;
      }
      const auto& c = plan.comps[ci];
      bool anchored_global = !c.members.empty() && c.members[0] == 0;
      for (const auto& o : c.optima) {
        for (int orient = 0; orient < (anchored_global ? 1 : 2); ++orient) {
          for (std::size_t i = 0; i < c.members.size(); ++i)
            sides[c.members[i]] =
                orient ? static_cast<std::uint8_t>(1 - o[i]) : o[i];
          rec(ci + 1);
          if (out.size() > opts.enumeration_cap) return;
        }
      }
    };
    rec(0);
    for (const auto& c : plan.comps) truncated = truncated || c.optima_truncated;
    if (out.size() > opts.enumeration_cap) {
      out.resize(opts.enumeration_cap);
      truncated = true;
    }
    std::sort(out.begin(), out.end());
    result.all_optima = std::move(out);
    result.optima_truncated = truncated;
  }
  return result;
}

OptimaResult enumerate_optima(const SignedDigraph& g, std::size_t cap,
                              const SolveOptions& opts) {
  SolveOptions o = opts;
  o.enumerate_all = true;
  o.enumeration_cap = cap;
  SolveResult r = solve_exact(g, o);
  OptimaResult out;
  if (!r.proven || !r.all_optima) {
    out.truncated = true;  // exact optimum not provable within budget
    return out;
  }
  out.optima = *r.all_optima;
  out.truncated = r.optima_truncated;
  return out;
}

double normalized_F(long L, std::size_t m) {
  if (m == 0) throw EmptyGraph("normalized index undefined for m = 0");
  return 1.0 - 2.0 * static_cast<double>(L) / static_cast<double>(m);
}

}  // namespace sgb
