#include "sgbalance/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace sgb {

double clustering_coefficient(const SignedDigraph& g) {
  if (g.n() < 3) throw TooSmall("clustering coefficient needs n >= 3");
  std::size_t triangles = 0, triples = 0;
  for (NodeIndex u = 0; u < g.n(); ++u) {
    const auto& nu = g.und_neighbors(u);
    std::size_t d = nu.size();
    if (d >= 2) triples += d * (d - 1) / 2;
    for (std::size_t a = 0; a < nu.size(); ++a) {
      NodeIndex v = nu[a];
      if (v <= u) continue;
      const auto& nv = g.und_neighbors(v);
      // Count common neighbors w > v of u and v.
      auto it = std::upper_bound(nv.begin(), nv.end(), v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      while (it != nv.end() && iu != nu.end()) {
        if (*it < *iu)
          ++it;
        else if (*iu < *it)
          ++iu;
        else {
          ++triangles;
          ++it;
          ++iu;
        }
      }
    }
  }
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw LengthMismatch("pearson needs two equal series of length >= 3");
  double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0)
    throw ZeroVariance("pearson needs nonzero variance in both series");
  return sxy / std::sqrt(sxx * syy);
}

double round3(double x) {
  // Half away from zero; the tiny nudge keeps exact rational halves (which
  // the doubles may undershoot) on the away-from-zero side.
  double mag = std::floor(std::abs(x) * 1000.0 + 0.5 + 1e-9);
  double r = std::copysign(mag / 1000.0, x);
  return r == 0.0 ? 0.0 : r;
}

std::string format3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", round3(x));
  return buf;
}

// ---------------------------------------------------------------------------
// Config loading
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

void require_keys(const json& obj, const char* what,
                  std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw ConfigError(std::string("unknown key '") + it.key() + "' in " +
                        what);
  }
}

char parse_delimiter(const json& v) {
  std::string s = v.get<std::string>();
  if (s == "tab" || s == "\\t" || s == "\t") return '\t';
  if (s.size() != 1)
    throw ConfigError("delimiter must be a single character or \"tab\"");
  return s[0];
}

CsvSchema parse_schema(const json& j) {
  require_keys(j, "schema",
               {"source", "target", "weight", "layer", "time", "delimiter"});
  CsvSchema s;
  if (j.contains("source")) s.source = j.at("source").get<std::string>();
  if (j.contains("target")) s.target = j.at("target").get<std::string>();
  if (j.contains("weight")) s.weight = j.at("weight").get<std::string>();
  if (j.contains("layer")) s.layer = j.at("layer").get<std::string>();
  if (j.contains("time")) s.time = j.at("time").get<std::string>();
  if (j.contains("delimiter")) s.delimiter = parse_delimiter(j.at("delimiter"));
  return s;
}

SignRule parse_rule(const json& j) {
  require_keys(j, "sign_rule",
               {"variant", "min_abs", "top_k", "bottom_k", "rank_max"});
  std::string variant = j.value("variant", "sign_only");
  if (variant == "sign_only") return SignRule::sign_only();
  if (variant == "threshold")
    return SignRule::threshold(j.value("min_abs", 1.0));
  if (variant == "rank_top_bottom")
    return SignRule::rank_top_bottom(j.value("top_k", 3), j.value("bottom_k", 3),
                                     j.value("rank_max", 17));
  throw ConfigError("unknown sign rule variant '" + variant + "'");
}

SolveOptions parse_solver(const json& j) {
  require_keys(j, "solver",
               {"node_budget", "time_budget_s", "restarts", "enumerate_all",
                "enumeration_cap", "seed"});
  SolveOptions o;
  if (j.contains("node_budget"))
    o.node_budget = j.at("node_budget").get<std::uint64_t>();
  if (j.contains("time_budget_s"))
    o.time_budget_s = j.at("time_budget_s").get<double>();
  if (j.contains("restarts")) o.restarts = j.at("restarts").get<int>();
  if (j.contains("enumerate_all"))
    o.enumerate_all = j.at("enumerate_all").get<bool>();
  if (j.contains("enumeration_cap"))
    o.enumeration_cap = j.at("enumeration_cap").get<std::size_t>();
  if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
  return o;
}

DatasetConfig parse_dataset(const json& j,
                            const std::filesystem::path& base_dir) {
  require_keys(j, "dataset",
               {"label", "mode", "input", "inputs", "format", "schema",
                "sign_rule", "symmetrize", "conflict_policy", "solver",
                "times", "out_dir"});
  DatasetConfig cfg;
  if (!j.contains("label") || !j.at("label").is_string())
    throw ConfigError("dataset needs a string 'label'");
  cfg.label = j.at("label").get<std::string>();

  std::string mode = j.value("mode", "static");
  if (mode == "static" || mode == "static_graph")
    cfg.mode = DatasetConfig::Mode::static_graph;
  else if (mode == "temporal")
    cfg.mode = DatasetConfig::Mode::temporal;
  else if (mode == "multilayer")
    cfg.mode = DatasetConfig::Mode::multilayer;
  else
    throw ConfigError("unknown mode '" + mode + "' for " + cfg.label);

  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative()) path = base_dir / path;
    return path.string();
  };
  auto add_input = [&](const json& v) {
    if (v.is_string()) {
      std::string p = v.get<std::string>();
      std::string stem = std::filesystem::path(p).stem().string();
      cfg.inputs.emplace_back(resolve(p), stem);
    } else if (v.is_object()) {
      require_keys(v, "input entry", {"path", "layer"});
      std::string p = v.at("path").get<std::string>();
      std::string layer = v.value(
          "layer", std::filesystem::path(p).stem().string());
      cfg.inputs.emplace_back(resolve(p), layer);
    } else {
      throw ConfigError("inputs must be paths or {path, layer} objects");
    }
  };
  if (j.contains("input")) add_input(j.at("input"));
  if (j.contains("inputs")) {
    if (!j.at("inputs").is_array())
      throw ConfigError("'inputs' must be an array");
    for (const auto& v : j.at("inputs")) add_input(v);
  }
  if (cfg.inputs.empty())
    throw ConfigError("dataset '" + cfg.label + "' has no inputs");

  cfg.format = j.value("format", "csv");
  if (cfg.format != "csv" && cfg.format != "gml")
    throw ConfigError("format must be csv or gml");
  if (j.contains("schema")) cfg.schema = parse_schema(j.at("schema"));
  if (j.contains("sign_rule")) cfg.sign_rule = parse_rule(j.at("sign_rule"));
  cfg.symmetrize = j.value("symmetrize", false);
  std::string policy = j.value("conflict_policy", "error");
  if (policy == "error")
    cfg.conflict_policy = ConflictPolicy::error;
  else if (policy == "keep_negative")
    cfg.conflict_policy = ConflictPolicy::keep_negative;
  else if (policy == "keep_positive")
    cfg.conflict_policy = ConflictPolicy::keep_positive;
  else
    throw ConfigError("unknown conflict_policy '" + policy + "'");
  if (j.contains("solver")) cfg.solver = parse_solver(j.at("solver"));
  if (j.contains("times")) {
    if (!j.at("times").is_array())
      throw ConfigError("'times' must be an array of labels");
    for (const auto& t : j.at("times"))
      cfg.times.push_back(t.get<std::string>());
  }
  if (j.contains("out_dir"))
    cfg.out_dir = resolve(j.at("out_dir").get<std::string>());

  if (cfg.mode != DatasetConfig::Mode::multilayer && cfg.inputs.size() > 1)
    throw ConfigError("dataset '" + cfg.label +
                      "': multiple inputs need multilayer mode");
  if (cfg.mode == DatasetConfig::Mode::temporal && cfg.format != "csv")
    throw ConfigError("temporal mode needs a csv input with a time column");
  if (cfg.mode == DatasetConfig::Mode::temporal && cfg.schema.time.empty())
    throw ConfigError("temporal mode needs schema.time");
  return cfg;
}

}  // namespace

std::vector<DatasetConfig> load_configs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  auto base = std::filesystem::path(path).parent_path();
  std::vector<DatasetConfig> configs;
  try {
    if (root.is_object() && root.contains("datasets")) {
      require_keys(root, "config", {"datasets"});
      for (const auto& d : root.at("datasets"))
        configs.push_back(parse_dataset(d, base));
    } else if (root.is_object()) {
      configs.push_back(parse_dataset(root, base));
    } else {
      throw ConfigError("config root must be an object");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
  if (configs.empty()) throw ConfigError("config lists no datasets");
  return configs;
}

// ---------------------------------------------------------------------------
// Ingestion per config
// ---------------------------------------------------------------------------

namespace {

std::vector<RawRecord> read_records(const std::string& path,
                                    const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  return parse_edge_csv(in, schema);
}

SignedDigraph graph_from_records(const std::vector<RawRecord>& records,
                                 const DatasetConfig& cfg) {
  SignedDigraph g = build_graph(apply_sign_rule(records, cfg.sign_rule));
  if (cfg.symmetrize) g = symmetrize(g);
  return g;
}

SignedDigraph read_gml_graph(const std::string& path, bool symmetrize_flag) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  SignedDigraph g = parse_gml(in);
  if (symmetrize_flag) g = symmetrize(g);
  return g;
}

// Group labels in first-appearance order.
template <typename KeyFn>
std::vector<std::pair<std::string, std::vector<RawRecord>>> group_records(
    const std::vector<RawRecord>& records, KeyFn key) {
  std::vector<std::pair<std::string, std::vector<RawRecord>>> groups;
  for (const auto& r : records) {
    std::string k = key(r);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == k; });
    if (it == groups.end()) {
      groups.push_back({k, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back(r);
  }
  return groups;
}

}  // namespace

std::vector<std::pair<std::string, SignedDigraph>> ingest_networks(
    const DatasetConfig& cfg) {
  std::vector<std::pair<std::string, SignedDigraph>> out;
  switch (cfg.mode) {
    case DatasetConfig::Mode::static_graph: {
      const auto& [path, layer] = cfg.inputs.front();
      (void)layer;
      SignedDigraph g =
          cfg.format == "gml"
              ? read_gml_graph(path, cfg.symmetrize)
              : graph_from_records(read_records(path, cfg.schema), cfg);
      out.emplace_back(cfg.label, std::move(g));
      return out;
    }
    case DatasetConfig::Mode::temporal: {
      auto records = read_records(cfg.inputs.front().first, cfg.schema);
      auto groups =
          group_records(records, [](const RawRecord& r) { return r.time; });
      if (!cfg.times.empty()) {
        decltype(groups) picked;
        for (const auto& want : cfg.times) {
          auto it = std::find_if(groups.begin(), groups.end(),
                                 [&](const auto& g) { return g.first == want; });
          if (it == groups.end())
            throw ConfigError("time label '" + want + "' not present in " +
                              cfg.inputs.front().first);
          picked.push_back(std::move(*it));
        }
        groups = std::move(picked);
      }
      for (auto& [time, recs] : groups)
        out.emplace_back(cfg.label + "/" + time,
                         graph_from_records(recs, cfg));
      return out;
    }
    case DatasetConfig::Mode::multilayer: {
      MultilayerNetwork ml;
      if (cfg.inputs.size() == 1 && cfg.format == "csv" &&
          !cfg.schema.layer.empty()) {
        auto records = read_records(cfg.inputs.front().first, cfg.schema);
        auto groups =
            group_records(records, [](const RawRecord& r) { return r.layer; });
        for (auto& [layer, recs] : groups)
          ml.layers.emplace_back(layer, graph_from_records(recs, cfg));
      } else {
        for (const auto& [path, layer] : cfg.inputs) {
          SignedDigraph g =
              cfg.format == "gml"
                  ? read_gml_graph(path, cfg.symmetrize)
                  : graph_from_records(read_records(path, cfg.schema), cfg);
          ml.layers.emplace_back(layer, std::move(g));
        }
      }
      for (auto& [layer, g] : ml.layers)
        out.emplace_back(cfg.label + "/" + layer, g);
      out.emplace_back(cfg.label + "/flat", flatten(ml, cfg.conflict_policy));
      return out;
    }
  }
  throw ConfigError("unknown dataset mode");
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

namespace {

NetworkAnalysis analyze_network(const std::string& label, SignedDigraph g,
                                SolveOptions opts) {
  NetworkAnalysis na;
  na.row.network_label = label;
  na.graph = std::move(g);
  const SignedDigraph& graph = na.graph;

  GraphSummary s = summary(graph);
  na.row.n = s.n;
  na.row.m = s.m;
  na.row.m_plus = s.m_plus;
  na.row.m_minus = s.m_minus;
  na.row.density = s.density;

  MicroReport micro = micro_stats(graph);
  na.row.balanced_triads = micro.balanced_count;
  na.row.unbalanced_triads = micro.unbalanced_count;
  na.row.T = micro.T;
  na.row.balanced_fraction_by_type = micro.balanced_fraction_by_type;
  if (graph.n() >= 3)
    na.row.clustering_coefficient = clustering_coefficient(graph);

  opts.enumerate_all = true;
  na.solve = solve_exact(graph, opts);
  na.row.L_lower = na.solve.bounds.lower;
  na.row.L_upper = na.solve.bounds.upper;
  na.row.proven = na.solve.proven;
  if (graph.m() > 0) {
    na.row.F_lower = normalized_F(na.solve.bounds.upper, graph.m());
    na.row.F_upper = normalized_F(na.solve.bounds.lower, graph.m());
  }

  if (graph.n() > 0) {
    std::vector<Partition> optima;
    if (na.solve.all_optima && !na.solve.all_optima->empty())
      optima = *na.solve.all_optima;
    else
      optima = {na.solve.partition};
    na.meso = meso_report(graph, optima);
    na.row.C = na.meso.canonical_C;
    na.row.D = na.meso.canonical_D;
  }
  return na;
}

std::size_t worker_count(std::size_t jobs) {
  if (jobs <= 1) return jobs;
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* cap = std::getenv("BALANCE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end && *end == '\0' && v >= 1)
      workers = std::min<std::size_t>(workers, static_cast<std::size_t>(v));
  }
  return std::min(workers, jobs);
}

}  // namespace

AnalyzeResult analyze(const std::vector<DatasetConfig>& configs) {
  if (configs.empty()) throw ConfigError("nothing to analyze");

  struct Job {
    std::string label;
    SignedDigraph graph;
    SolveOptions opts;
  };
  std::vector<Job> jobs;
  for (const auto& cfg : configs) {
    try {
      for (auto& [label, g] : ingest_networks(cfg))
        jobs.push_back({label, std::move(g), cfg.solver});
    } catch (const Error& e) {
      throw Error(cfg.label + ": " + e.what());
    }
  }

  AnalyzeResult result;
  result.networks.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        result.networks[i] = analyze_network(jobs[i].label,
                                             std::move(jobs[i].graph),
                                             jobs[i].opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t workers = worker_count(jobs.size());
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(jobs[i].label + ": " + e.what());
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q.push_back(c);
  }
  q += "\"";
  return q;
}

std::string opt3(const std::optional<double>& v) {
  return v ? format3(*v) : std::string();
}

std::string percent1(double fraction) {
  char buf[32];
  double mag = std::floor(std::abs(fraction) * 1000.0 + 0.5 + 1e-9) / 10.0;
  std::snprintf(buf, sizeof(buf), "%.1f%%", std::copysign(mag, fraction));
  return buf;
}

/// "300:86.8%|120D:7.4%": nonzero balanced shares, largest first.
std::string census_cell(const std::map<CensusType, double>& shares) {
  std::vector<std::pair<CensusType, double>> entries;
  for (const auto& [t, v] : shares)
    if (v > 0) entries.push_back({t, v});
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return to_string(a.first) < to_string(b.first);
  });
  std::string cell;
  for (const auto& [t, v] : entries) {
    if (!cell.empty()) cell += "|";
    cell += to_string(t) + ":" + percent1(v);
  }
  return cell;
}

std::string l_cell(const MeasurementRow& r) {
  if (r.proven) return std::to_string(r.L_upper);
  return "[" + std::to_string(r.L_lower) + "," + std::to_string(r.L_upper) +
         "]";
}

std::string f_cell(const MeasurementRow& r) {
  if (!r.F_lower || !r.F_upper) return "";
  if (r.proven) return format3(*r.F_lower);
  return "[" + format3(*r.F_lower) + "," + format3(*r.F_upper) + "]";
}

}  // namespace

void write_measurements_csv(const AnalyzeResult& result, std::ostream& out) {
  out << "network,n,m,m_plus,m_minus,balanced_triads,unbalanced_triads,"
         "T,clustering_coefficient,density,L,F,C,D,"
         "balanced_census_by_type,proven\n";
  for (const auto& na : result.networks) {
    const MeasurementRow& r = na.row;
    out << csv_quote(r.network_label) << ',' << r.n << ',' << r.m << ','
        << r.m_plus << ',' << r.m_minus << ',' << r.balanced_triads << ','
        << r.unbalanced_triads << ',' << opt3(r.T) << ','
        << opt3(r.clustering_coefficient) << ',' << opt3(r.density) << ','
        << csv_quote(l_cell(r)) << ',' << csv_quote(f_cell(r)) << ','
        << opt3(r.C) << ',' << opt3(r.D) << ','
        << csv_quote(census_cell(r.balanced_fraction_by_type)) << ','
        << (r.proven ? "true" : "false") << '\n';
  }
  if (!out) throw IoFailure("failed writing measurements");
}

namespace {

using nlohmann::json;

json row_json(const MeasurementRow& r) {
  json j;
  j["network"] = r.network_label;
  j["n"] = r.n;
  j["m"] = r.m;
  j["m_plus"] = r.m_plus;
  j["m_minus"] = r.m_minus;
  j["balanced_triads"] = r.balanced_triads;
  j["unbalanced_triads"] = r.unbalanced_triads;
  j["T"] = r.T ? json(round3(*r.T)) : json();
  j["clustering_coefficient"] = r.clustering_coefficient
                                    ? json(round3(*r.clustering_coefficient))
                                    : json();
  j["density"] = r.density ? json(round3(*r.density)) : json();
  if (r.proven) {
    j["L"] = r.L_upper;
    j["F"] = r.F_lower ? json(round3(*r.F_lower)) : json();
  } else {
    j["L"] = json::array({r.L_lower, r.L_upper});
    j["F"] = (r.F_lower && r.F_upper)
                 ? json::array({round3(*r.F_lower), round3(*r.F_upper)})
                 : json();
  }
  j["C"] = r.C ? json(round3(*r.C)) : json();
  j["D"] = r.D ? json(round3(*r.D)) : json();
  json census = json::object();
  for (const auto& [t, v] : r.balanced_fraction_by_type)
    census[to_string(t)] = round3(v);
  j["balanced_census_by_type"] = census;
  j["proven"] = r.proven;
  return j;
}

}  // namespace

void write_measurements_json(const AnalyzeResult& result, std::ostream& out) {
  json j = json::array();
  for (const auto& na : result.networks) j.push_back(row_json(na.row));
  out << j.dump(2) << '\n';
  if (!out) throw IoFailure("failed writing measurements");
}

std::vector<std::string> partition_cells(const SignedDigraph& g,
                                         const SolveResult& result) {
  const Partition& p = result.partition;
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  std::vector<std::string> cells;
  cells.reserve(g.n() + 3 * g.m());
  for (NodeIndex i = 0; i < g.n(); ++i)
    cells.push_back("x" + std::to_string(i) + " : " +
                    std::to_string(static_cast<int>(p.side(i))));
  auto classes = classify_edges(g, p);
  auto edge_name = [](char v, const Edge& e) {
    return std::string(1, v) + "_" + std::to_string(e.src) + "_" +
           std::to_string(e.dst);
  };
  for (const auto& c : classes)
    cells.push_back(edge_name('f', c.edge) + " : " +
                    std::to_string(c.frustrated ? 1 : 0));
  for (const auto& c : classes)
    cells.push_back(edge_name('s', c.edge) + " : " +
                    std::to_string(to_int(c.edge.sign)));
  for (const auto& c : classes)
    cells.push_back(edge_name('t', c.edge) + " : " + std::to_string(c.t));
  return cells;
}

void export_partition(const SignedDigraph& g, const SolveResult& result,
                      std::ostream& sink) {
  for (const auto& cell : partition_cells(g, result)) sink << cell << '\n';
  if (!sink) throw IoFailure("failed writing partition export");
}

void write_partitions_csv(const AnalyzeResult& result, std::ostream& out) {
  std::vector<std::vector<std::string>> columns;
  std::size_t rows = 0;
  for (const auto& na : result.networks) {
    columns.push_back(partition_cells(na.graph, na.solve));
    rows = std::max(rows, columns.back().size());
  }
  for (std::size_t i = 0; i < result.networks.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(result.networks[i].row.network_label);
  }
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      if (r < columns[c].size()) out << csv_quote(columns[c][r]);
    }
    out << '\n';
  }
  if (!out) throw IoFailure("failed writing partitions");
}

void write_partitions_json(const AnalyzeResult& result, std::ostream& out) {
  json j = json::array();
  for (const auto& na : result.networks) {
    json entry;
    entry["network"] = na.row.network_label;
    entry["cells"] = partition_cells(na.graph, na.solve);
    j.push_back(entry);
  }
  out << j.dump(2) << '\n';
  if (!out) throw IoFailure("failed writing partitions");
}

}  // namespace sgb
