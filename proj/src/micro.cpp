#include "sgbalance/micro.hpp"

#include <algorithm>

namespace sgb {

std::string to_string(CensusType t) {
  switch (t) {
    case CensusType::t030T: return "030T";
    case CensusType::t030C: return "030C";
    case CensusType::t120D: return "120D";
    case CensusType::t120U: return "120U";
    case CensusType::t120C: return "120C";
    case CensusType::t210: return "210";
    case CensusType::t300: return "300";
  }
  return "?";
}

int Triad::mutual_dyads() const {
  int m = 0;
  for (const auto& p : pairs)
    if (p.fwd && p.rev) ++m;
  return m;
}

std::vector<Edge> Triad::edge_list() const {
  static constexpr int lo[3] = {0, 0, 1};
  static constexpr int hi[3] = {1, 2, 2};
  std::vector<Edge> out;
  for (int k = 0; k < 3; ++k) {
    if (pairs[k].fwd) out.push_back({nodes[lo[k]], nodes[hi[k]], pairs[k].sf});
    if (pairs[k].rev) out.push_back({nodes[hi[k]], nodes[lo[k]], pairs[k].sr});
  }
  return out;
}

void for_each_triad(const SignedDigraph& g,
                    const std::function<void(const Triad&)>& fn) {
  const std::size_t n = g.n();
  auto pair_info = [&](NodeIndex x, NodeIndex y) {
    Triad::PairInfo p;
    if (auto s = g.edge_sign(x, y)) {
      p.fwd = true;
      p.sf = *s;
    }
    if (auto s = g.edge_sign(y, x)) {
      p.rev = true;
      p.sr = *s;
    }
    return p;
  };
  for (NodeIndex u = 0; u < n; ++u) {
    const auto& nu = g.und_neighbors(u);
    for (NodeIndex v : nu) {
      if (v <= u) continue;
      const auto& nv = g.und_neighbors(v);
      // intersect neighbors of u and v that exceed v
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          NodeIndex w = *iu;
          Triad t;
          t.nodes = {u, v, w};
          t.pairs = {pair_info(u, v), pair_info(u, w), pair_info(v, w)};
          fn(t);
          ++iu;
          ++iv;
        }
      }
    }
  }
}

std::vector<Triad> enumerate_triads(const SignedDigraph& g) {
  std::vector<Triad> out;
  for_each_triad(g, [&](const Triad& t) { out.push_back(t); });
  return out;
}

CensusType classify_triad(const Triad& t) {
  int mutual = t.mutual_dyads();
  switch (mutual) {
    case 3:
      return CensusType::t300;
    case 2:
      return CensusType::t210;
    case 1: {
      // locate the mutual pair; z is the node outside it
      int mk = 0;
      while (!(t.pairs[mk].fwd && t.pairs[mk].rev)) ++mk;
      // pair index k connects nodes lo[k], hi[k]; the other two pairs are
      // the asymmetric ones touching z.
      static constexpr int lo[3] = {0, 0, 1};
      static constexpr int hi[3] = {1, 2, 2};
      int z = 3 - lo[mk] - hi[mk];
      bool toward_z = true, from_z = true;
      for (int k = 0; k < 3; ++k) {
        if (k == mk) continue;
        // the asymmetric edge on pair k; does it point to z or away?
        bool points_to_z;
        if (hi[k] == z)
          points_to_z = t.pairs[k].fwd;
        else
          points_to_z = t.pairs[k].rev;
        toward_z = toward_z && points_to_z;
        from_z = from_z && !points_to_z;
      }
      if (toward_z) return CensusType::t120D;
      if (from_z) return CensusType::t120U;
      return CensusType::t120C;
    }
    default: {
      // three asymmetric dyads: transitive iff some node has out-degree 2
      int outdeg[3] = {0, 0, 0};
      static constexpr int lo[3] = {0, 0, 1};
      static constexpr int hi[3] = {1, 2, 2};
      for (int k = 0; k < 3; ++k) {
        if (t.pairs[k].fwd)
          ++outdeg[lo[k]];
        else
          ++outdeg[hi[k]];
      }
      for (int i = 0; i < 3; ++i)
        if (outdeg[i] == 2) return CensusType::t030T;
      return CensusType::t030C;
    }
  }
}

std::vector<Semicycle> semicycles(const Triad& t) {
  static constexpr int lo[3] = {0, 0, 1};
  static constexpr int hi[3] = {1, 2, 2};
  std::vector<Semicycle> out;
  // per pair: candidate directed edges, low->high first
  std::array<std::vector<SemiEdge>, 3> choices;
  for (int k = 0; k < 3; ++k) {
    if (t.pairs[k].fwd)
      choices[k].push_back({t.nodes[lo[k]], t.nodes[hi[k]], t.pairs[k].sf});
    if (t.pairs[k].rev)
      choices[k].push_back({t.nodes[hi[k]], t.nodes[lo[k]], t.pairs[k].sr});
  }
  for (const auto& e0 : choices[0])
    for (const auto& e1 : choices[1])
      for (const auto& e2 : choices[2]) out.push_back({{e0, e1, e2}});
  return out;
}

bool is_transitive(const Semicycle& sc, const Triad& t) {
  auto triad_has = [&](NodeIndex x, NodeIndex y) {
    static constexpr int lo[3] = {0, 0, 1};
    static constexpr int hi[3] = {1, 2, 2};
    for (int k = 0; k < 3; ++k) {
      if (t.nodes[lo[k]] == x && t.nodes[hi[k]] == y) return t.pairs[k].fwd;
      if (t.nodes[hi[k]] == x && t.nodes[lo[k]] == y) return t.pairs[k].rev;
    }
    return false;
  };
  for (const auto& e1 : sc.edges) {
    for (const auto& e2 : sc.edges) {
      if (e1.dst != e2.src || (e1.src == e2.src && e1.dst == e2.dst)) continue;
      if (!triad_has(e1.src, e2.dst)) return false;
    }
  }
  return true;
}

bool semicycle_balanced(const Semicycle& sc) {
  int prod = 1;
  for (const auto& e : sc.edges) prod *= to_int(e.sign);
  return prod > 0;
}

bool triad_transitive(const Triad& t) {
  for (const auto& sc : semicycles(t))
    if (!is_transitive(sc, t)) return false;
  return true;
}

bool triad_balanced(const Triad& t) {
  for (const auto& sc : semicycles(t))
    if (!semicycle_balanced(sc)) return false;
  return true;
}

namespace {

// Balance of a transitive triad without materializing semicycles: every
// semicycle is balanced iff each mutual dyad is sign-homogeneous and the
// product of the per-pair signs is positive.
bool transitive_triad_balanced_fast(const Triad& t) {
  int prod = 1;
  for (const auto& p : t.pairs) {
    if (p.fwd && p.rev && p.sf != p.sr) return false;
    prod *= to_int(p.fwd ? p.sf : p.sr);
  }
  return prod > 0;
}

bool is_transitive_type(CensusType c) {
  return c == CensusType::t030T || c == CensusType::t120D ||
         c == CensusType::t120U || c == CensusType::t300;
}

}  // namespace

MicroReport micro_stats(const SignedDigraph& g) {
  MicroReport r;
  for_each_triad(g, [&](const Triad& t) {
    ++r.triad_count;
    CensusType c = classify_triad(t);
    ++r.census[c];
    if (!is_transitive_type(c)) return;
    ++r.transitive_triad_count;
    if (transitive_triad_balanced_fast(t)) {
      ++r.balanced_count;
      ++r.balanced_by_type[c];
    } else {
      ++r.unbalanced_count;
    }
  });
  if (r.transitive_triad_count > 0) {
    r.T = static_cast<double>(r.balanced_count) /
          static_cast<double>(r.transitive_triad_count);
    for (CensusType c : {CensusType::t300, CensusType::t120D,
                         CensusType::t120U, CensusType::t030T}) {
      auto it = r.balanced_by_type.find(c);
      double b = it == r.balanced_by_type.end()
                     ? 0.0
                     : static_cast<double>(it->second);
      r.balanced_fraction_by_type[c] =
          b / static_cast<double>(r.transitive_triad_count);
    }
  }
  return r;
}

}  // namespace sgb
