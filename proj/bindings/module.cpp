// Python bindings: graphs are built from (source, target, sign) triples and
// node partitions cross the boundary as {node id -> side} dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgbalance/frustration.hpp"
#include "sgbalance/ingest.hpp"
#include "sgbalance/meso.hpp"
#include "sgbalance/micro.hpp"
#include "sgbalance/report.hpp"

namespace py = pybind11;
using namespace sgb;

namespace {

Partition partition_from_dict(const SignedDigraph& g, const py::dict& sides) {
  std::vector<std::pair<NodeId, int>> assignment;
  for (const auto& item : sides)
    assignment.emplace_back(py::cast<std::string>(item.first),
                            py::cast<int>(item.second));
  return partition_from_sides(g, assignment);
}

py::dict partition_to_dict(const SignedDigraph& g, const Partition& p) {
  py::dict out;
  for (NodeIndex i = 0; i < p.size(); ++i)
    out[py::str(g.node(i))] = static_cast<int>(p.side(i));
  return out;
}

SolveOptions options_from_kwargs(const py::kwargs& kwargs) {
  SolveOptions opts;
  for (const auto& item : kwargs) {
    std::string key = py::cast<std::string>(item.first);
    if (key == "node_budget") {
      opts.node_budget = py::cast<std::uint64_t>(item.second);
    } else if (key == "time_budget_s") {
      opts.time_budget_s = py::cast<double>(item.second);
    } else if (key == "restarts") {
      opts.restarts = py::cast<int>(item.second);
    } else if (key == "enumerate_all") {
      opts.enumerate_all = py::cast<bool>(item.second);
    } else if (key == "enumeration_cap") {
      opts.enumeration_cap = py::cast<std::size_t>(item.second);
    } else if (key == "seed") {
      opts.seed = py::cast<std::uint64_t>(item.second);
    } else {
      throw ConfigError("unknown solver option: " + key);
    }
  }
  return opts;
}

SignRule rule_from_args(const std::string& variant, double min_abs, int top_k,
                        int bottom_k, int rank_max) {
  if (variant == "sign_only") return SignRule::sign_only();
  if (variant == "threshold") return SignRule::threshold(min_abs);
  if (variant == "rank_top_bottom")
    return SignRule::rank_top_bottom(top_k, bottom_k, rank_max);
  throw ConfigError("unknown sign rule variant: " + variant);
}

py::dict solve_to_dict(const SignedDigraph& g, const SolveResult& res) {
  py::dict out;
  out["L"] = res.L;
  out["proven"] = res.proven;
  out["lower"] = res.bounds.lower;
  out["upper"] = res.bounds.upper;
  out["explored_nodes"] = res.explored_nodes;
  out["partition"] = partition_to_dict(g, res.partition);
  if (res.all_optima.has_value()) {
    py::list optima;
    for (const Partition& p : *res.all_optima)
      optima.append(partition_to_dict(g, p));
    out["optima"] = optima;
    out["optima_truncated"] = res.optima_truncated;
  } else {
    out["optima"] = py::none();
    out["optima_truncated"] = py::none();
  }
  return out;
}

py::object opt_to_py(const std::optional<double>& v) {
  if (!v) return py::none();
  return py::float_(*v);
}

py::dict meso_to_dict(const SignedDigraph& g, const MesoReport& report) {
  py::dict out;
  out["C"] = opt_to_py(report.canonical_C);
  out["D"] = opt_to_py(report.canonical_D);
  out["C_stddev"] = report.C_stddev;
  out["D_stddev"] = report.D_stddev;
  py::list per;
  for (const auto& entry : report.per_optimum) {
    py::dict row;
    row["partition"] = partition_to_dict(g, entry.partition);
    row["C"] = opt_to_py(entry.C);
    row["D"] = opt_to_py(entry.D);
    per.append(row);
  }
  out["per_optimum"] = per;
  return out;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  return in;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structural balance measures for signed directed networks";

  py::register_exception<Error>(m, "BalanceError");

  py::class_<SignedDigraph>(m, "SignedDigraph")
      .def_property_readonly("n", &SignedDigraph::n)
      .def_property_readonly("m", &SignedDigraph::m)
      .def_property_readonly("m_plus", &SignedDigraph::m_plus)
      .def_property_readonly("m_minus", &SignedDigraph::m_minus)
      .def("nodes", [](const SignedDigraph& g) { return g.nodes(); })
      .def("edges",
           [](const SignedDigraph& g) {
             py::list out;
             for (const Edge& e : g.edges())
               out.append(py::make_tuple(g.node(e.src), g.node(e.dst),
                                         to_int(e.sign)));
             return out;
           })
      .def("edge_sign",
           [](const SignedDigraph& g, const std::string& u,
              const std::string& v) -> py::object {
             auto s = g.edge_sign(g.require_index(u), g.require_index(v));
             if (!s) return py::none();
             return py::int_(to_int(*s));
           })
      .def("density",
           [](const SignedDigraph& g) { return opt_to_py(summary(g).density); })
      .def("__repr__", [](const SignedDigraph& g) {
        std::ostringstream s;
        s << "SignedDigraph(n=" << g.n() << ", m=" << g.m() << ", m_plus="
          << g.m_plus() << ", m_minus=" << g.m_minus() << ")";
        return s.str();
      });

  m.def(
      "build_graph",
      [](const std::vector<std::tuple<std::string, std::string, long long>>&
             triples) {
        std::vector<EdgeTriple> ts;
        ts.reserve(triples.size());
        for (const auto& [src, dst, sign] : triples)
          ts.push_back({src, dst, sign});
        return build_graph(ts);
      },
      py::arg("edges"),
      "Builds a signed digraph from (source, target, sign) triples");

  m.def(
      "read_csv",
      [](const std::string& path, const std::string& source,
         const std::string& target, const std::string& weight,
         const std::string& layer, const std::string& time,
         const std::string& delimiter) {
        CsvSchema schema;
        schema.source = source;
        schema.target = target;
        schema.weight = weight;
        schema.layer = layer;
        schema.time = time;
        if (delimiter.size() != 1)
          throw ConfigError("delimiter must be one character");
        schema.delimiter = delimiter[0];
        auto in = open_or_throw(path);
        py::list out;
        for (const RawRecord& r : parse_edge_csv(in, schema)) {
          py::dict row;
          row["source"] = r.source;
          row["target"] = r.target;
          row["weight"] = r.weight;
          if (!r.layer.empty()) row["layer"] = r.layer;
          if (!r.time.empty()) row["time"] = r.time;
          out.append(row);
        }
        return out;
      },
      py::arg("path"), py::arg("source") = "source",
      py::arg("target") = "target", py::arg("weight") = "weight",
      py::arg("layer") = "", py::arg("time") = "", py::arg("delimiter") = ",",
      "Reads a weighted edge-list CSV into record dicts");

  m.def(
      "read_gml",
      [](const std::string& path) {
        auto in = open_or_throw(path);
        return parse_gml(in);
      },
      py::arg("path"), "Reads a signed digraph from a GML file");

  m.def(
      "apply_sign_rule",
      [](const py::list& records, const std::string& variant, double min_abs,
         int top_k, int bottom_k, int rank_max) {
        std::vector<RawRecord> raw;
        for (const auto& item : records) {
          py::dict row = py::cast<py::dict>(item);
          RawRecord r;
          r.source = py::cast<std::string>(row["source"]);
          r.target = py::cast<std::string>(row["target"]);
          r.weight = py::cast<double>(row["weight"]);
          if (row.contains("layer"))
            r.layer = py::cast<std::string>(row["layer"]);
          if (row.contains("time")) r.time = py::cast<std::string>(row["time"]);
          raw.push_back(std::move(r));
        }
        auto triples = apply_sign_rule(
            raw, rule_from_args(variant, min_abs, top_k, bottom_k, rank_max));
        py::list out;
        for (const EdgeTriple& t : triples)
          out.append(py::make_tuple(t.source, t.target, t.sign));
        return out;
      },
      py::arg("records"), py::arg("variant") = "sign_only",
      py::arg("min_abs") = 1.0, py::arg("top_k") = 3, py::arg("bottom_k") = 3,
      py::arg("rank_max") = 17,
      "Maps weighted records to signed (source, target, sign) triples");

  m.def(
      "symmetrize", [](const SignedDigraph& g) { return symmetrize(g); },
      py::arg("graph"), "Adds the reverse of every arc with the same sign");

  m.def(
      "switch",
      [](const SignedDigraph& g, const std::vector<std::string>& subset) {
        return switch_cut(g, subset);
      },
      py::arg("graph"), py::arg("subset"),
      "Negates every arc with exactly one endpoint in the subset");

  m.def(
      "census",
      [](const SignedDigraph& g) {
        MicroReport r = micro_stats(g);
        py::dict out;
        out["triads"] = r.triad_count;
        out["transitive"] = r.transitive_triad_count;
        out["balanced"] = r.balanced_count;
        out["unbalanced"] = r.unbalanced_count;
        out["T"] = opt_to_py(r.T);
        py::dict census, balanced_by_type, shares;
        for (const auto& [type, count] : r.census)
          census[py::str(to_string(type))] = count;
        for (const auto& [type, count] : r.balanced_by_type)
          balanced_by_type[py::str(to_string(type))] = count;
        for (const auto& [type, share] : r.balanced_fraction_by_type)
          shares[py::str(to_string(type))] = share;
        out["census"] = census;
        out["balanced_by_type"] = balanced_by_type;
        out["balanced_fraction_by_type"] = shares;
        return out;
      },
      py::arg("graph"), "Triad census and balance statistics");

  m.def(
      "frustration_count",
      [](const SignedDigraph& g, const py::dict& sides) {
        return frustration_count(g, partition_from_dict(g, sides));
      },
      py::arg("graph"), py::arg("sides"),
      "Frustrated-edge count of one bipartition");

  m.def(
      "lower_bound", [](const SignedDigraph& g) { return lower_bound(g); },
      py::arg("graph"), "Combinatorial lower bound on the frustration index");

  m.def(
      "local_search",
      [](const SignedDigraph& g, const py::kwargs& kwargs) {
        Bounds b = local_search(g, options_from_kwargs(kwargs));
        py::dict out;
        out["lower"] = b.lower;
        out["upper"] = b.upper;
        out["partition"] = partition_to_dict(g, b.upper_partition);
        return out;
      },
      py::arg("graph"), "Hill-climbing certificate for the frustration index");

  m.def(
      "solve",
      [](const SignedDigraph& g, const py::kwargs& kwargs) {
        SolveResult res = solve_exact(g, options_from_kwargs(kwargs));
        return solve_to_dict(g, res);
      },
      py::arg("graph"),
      "Exact frustration index via branch and bound (see solver options)");

  m.def(
      "enumerate_optima",
      [](const SignedDigraph& g, std::size_t cap, const py::kwargs& kwargs) {
        OptimaResult r = enumerate_optima(g, cap, options_from_kwargs(kwargs));
        py::list optima;
        for (const Partition& p : r.optima)
          optima.append(partition_to_dict(g, p));
        py::dict out;
        out["optima"] = optima;
        out["truncated"] = r.truncated;
        return out;
      },
      py::arg("graph"), py::arg("cap") = 64,
      "All optimal bipartitions (canonical, deduplicated, capped)");

  m.def(
      "meso",
      [](const SignedDigraph& g, const py::dict& sides) {
        Partition p = partition_from_dict(g, sides);
        SplitResult split = internal_external_split(g, p);
        py::dict out;
        out["C"] = opt_to_py(cohesiveness(g, p));
        out["D"] = opt_to_py(divisiveness(g, p));
        out["internal"] = split.internal.size();
        out["external"] = split.external.size();
        return out;
      },
      py::arg("graph"), py::arg("sides"),
      "Cohesiveness and divisiveness of one bipartition");

  m.def(
      "meso_report",
      [](const SignedDigraph& g, const py::list& optima) {
        std::vector<Partition> ps;
        for (const auto& item : optima)
          ps.push_back(partition_from_dict(g, py::cast<py::dict>(item)));
        return meso_to_dict(g, meso_report(g, ps));
      },
      py::arg("graph"), py::arg("optima"),
      "Per-optimum cohesiveness/divisiveness across optimal bipartitions");

  m.def(
      "normalized_F",
      [](long L, std::size_t m_edges) { return normalized_F(L, m_edges); },
      py::arg("L"), py::arg("m"), "Normalized frustration index 1 - 2L/m");

  m.def(
      "clustering_coefficient",
      [](const SignedDigraph& g) { return clustering_coefficient(g); },
      py::arg("graph"),
      "Global transitivity of the sign-blind undirected projection");

  m.def(
      "pearson",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return pearson(xs, ys);
      },
      py::arg("xs"), py::arg("ys"), "Sample Pearson correlation");
}
