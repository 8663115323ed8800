#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgbalance/report.hpp"

namespace {

using namespace sgb;

struct IngestFlags {
  std::string format = "csv";
  std::string sign_rule = "sign_only";
  bool symmetrize = false;
  std::string source_col = "source";
  std::string target_col = "target";
  std::string weight_col = "weight";
  std::string delimiter = ",";
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& f) {
  cmd->add_option("--format", f.format, "Input format: csv or gml")
      ->check(CLI::IsMember({"csv", "gml"}));
  cmd->add_option("--sign-rule", f.sign_rule,
                  "sign_only | threshold:MIN | rank:TOP,BOTTOM,MAX");
  cmd->add_flag("--symmetrize", f.symmetrize,
                "Mirror every edge with the same sign");
  cmd->add_option("--source-col", f.source_col, "CSV source column name");
  cmd->add_option("--target-col", f.target_col, "CSV target column name");
  cmd->add_option("--weight-col", f.weight_col, "CSV weight column name");
  cmd->add_option("--delimiter", f.delimiter,
                  "CSV delimiter (single character or 'tab')");
}

SignRule parse_rule_flag(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "sign_only") return SignRule::sign_only();
  if (name == "threshold") {
    if (args.empty()) throw ConfigError("threshold needs :MIN");
    return SignRule::threshold(std::stod(args));
  }
  if (name == "rank" || name == "rank_top_bottom") {
    int top = 0, bottom = 0, max = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(args);
    if (!(ss >> top >> c1 >> bottom >> c2 >> max) || c1 != ',' || c2 != ',')
      throw ConfigError("rank rule needs :TOP,BOTTOM,MAX");
    return SignRule::rank_top_bottom(top, bottom, max);
  }
  throw ConfigError("unknown sign rule '" + text + "'");
}

SignedDigraph load_input(const std::string& path, const IngestFlags& f) {
  DatasetConfig cfg;
  cfg.label = path;
  cfg.inputs = {{path, ""}};
  cfg.format = f.format;
  cfg.sign_rule = parse_rule_flag(f.sign_rule);
  cfg.symmetrize = f.symmetrize;
  cfg.schema.source = f.source_col;
  cfg.schema.target = f.target_col;
  cfg.schema.weight = f.weight_col;
  if (f.delimiter == "tab" || f.delimiter == "\\t")
    cfg.schema.delimiter = '\t';
  else if (f.delimiter.size() == 1)
    cfg.schema.delimiter = f.delimiter[0];
  else
    throw ConfigError("delimiter must be a single character or 'tab'");
  return ingest_networks(cfg).front().second;
}

std::string side_members(const SignedDigraph& g, const Partition& p,
                         int side) {
  std::string out;
  for (NodeIndex i = 0; i < g.n(); ++i) {
    if (p.side(i) != side) continue;
    if (!out.empty()) out += " ";
    out += g.node(i);
  }
  return out;
}

int run_solve(const std::string& input, const IngestFlags& flags,
              const SolveOptions& opts, std::size_t enumerate_cap,
              bool require_proven, const std::string& out_file) {
  SignedDigraph g = load_input(input, flags);
  SolveOptions local = opts;
  if (enumerate_cap > 0) {
    local.enumerate_all = true;
    local.enumeration_cap = enumerate_cap;
  }
  SolveResult res = solve_exact(g, local);

  GraphSummary s = summary(g);
  std::cout << "n=" << s.n << " m=" << s.m << " (" << s.m_plus << "+, "
            << s.m_minus << "-)\n";
  if (res.proven) {
    std::cout << "L=" << res.L << " proven (explored "
              << res.explored_nodes << " nodes)\n";
  } else {
    std::cout << "L in [" << res.bounds.lower << "," << res.bounds.upper
              << "] unproven (explored " << res.explored_nodes
              << " nodes)\n";
  }
  if (s.m > 0) {
    if (res.proven) {
      std::cout << "F=" << format3(normalized_F(res.L, s.m)) << "\n";
    } else {
      std::cout << "F in [" << format3(normalized_F(res.bounds.upper, s.m))
                << "," << format3(normalized_F(res.bounds.lower, s.m))
                << "]\n";
    }
  }
  std::cout << "side 0: " << side_members(g, res.partition, 0) << "\n";
  std::cout << "side 1: " << side_members(g, res.partition, 1) << "\n";
  if (res.all_optima) {
    std::cout << "optima: " << res.all_optima->size()
              << (res.optima_truncated ? " (truncated)" : "") << "\n";
    for (const auto& p : *res.all_optima) {
      std::string bits;
      for (NodeIndex i = 0; i < g.n(); ++i)
        bits += p.side(i) ? '1' : '0';
      std::cout << "  " << bits << "\n";
    }
  }
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw IoFailure("cannot open " + out_file);
    export_partition(g, res, out);
    std::cout << "partition written to " << out_file << "\n";
  }
  if (require_proven && !res.proven) return 3;
  return 0;
}

int run_census(const std::string& input, const IngestFlags& flags) {
  SignedDigraph g = load_input(input, flags);
  MicroReport micro = micro_stats(g);
  std::cout << "triads: " << micro.triad_count << "\n";
  for (const auto& [type, count] : micro.census)
    std::cout << to_string(type) << ": " << count << "\n";
  std::cout << "transitive: " << micro.transitive_triad_count
            << " balanced: " << micro.balanced_count
            << " unbalanced: " << micro.unbalanced_count << "\n";
  if (micro.T) std::cout << "T=" << format3(*micro.T) << "\n";
  return 0;
}

int run_correlate(const std::string& file, const std::string& xcol,
                  const std::string& ycol) {
  std::ifstream in(file);
  if (!in) throw IoFailure("cannot open " + file);
  std::string line;
  if (!std::getline(in, line)) throw EmptyFile("no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : s) {
      if (quoted) {
        if (c == '"') quoted = false;
        else cell.push_back(c);
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell.push_back(c);
      }
    }
    cells.push_back(cell);
    return cells;
  };
  auto header = split(line);
  auto find = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw MissingColumn("column '" + name + "' not found in " + file);
  };
  std::size_t xi = find(xcol), yi = find(ycol);
  std::vector<double> xs, ys;
  std::size_t skipped = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() <= std::max(xi, yi)) {
      ++skipped;
      continue;
    }
    try {
      std::size_t ux = 0, uy = 0;
      double x = std::stod(cells[xi], &ux);
      double y = std::stod(cells[yi], &uy);
      if (ux != cells[xi].size() || uy != cells[yi].size()) {
        ++skipped;
        continue;
      }
      xs.push_back(x);
      ys.push_back(y);
    } catch (const std::exception&) {
      ++skipped;
    }
  }
  double r = pearson(xs, ys);
  std::cout << "r(" << xcol << "," << ycol << ")=" << format3(r) << " over "
            << xs.size() << " rows";
  if (skipped > 0) std::cout << " (" << skipped << " skipped)";
  std::cout << "\n";
  return 0;
}

int run_analyze(const std::string& config_path, std::string out_dir,
                bool json_mirror, bool require_proven) {
  auto configs = load_configs(config_path);
  if (out_dir.empty()) {
    for (const auto& cfg : configs)
      if (!cfg.out_dir.empty()) {
        out_dir = cfg.out_dir;
        break;
      }
  }
  if (out_dir.empty()) out_dir = ".";
  std::filesystem::create_directories(out_dir);

  AnalyzeResult result = analyze(configs);

  auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };
  {
    std::ofstream out(path("network-measurements.csv"));
    if (!out) throw IoFailure("cannot open measurements output");
    write_measurements_csv(result, out);
  }
  {
    std::ofstream out(path("optimal-partitions.csv"));
    if (!out) throw IoFailure("cannot open partitions output");
    write_partitions_csv(result, out);
  }
  if (json_mirror) {
    std::ofstream m(path("network-measurements.json"));
    write_measurements_json(result, m);
    std::ofstream p(path("optimal-partitions.json"));
    write_partitions_json(result, p);
  }

  bool all_proven = true;
  for (const auto& na : result.networks) {
    const auto& r = na.row;
    std::cout << r.network_label << ": n=" << r.n << " m=" << r.m << " L=";
    if (r.proven)
      std::cout << r.L_upper;
    else
      std::cout << "[" << r.L_lower << "," << r.L_upper << "]";
    if (r.F_lower) {
      std::cout << " F=";
      if (r.proven)
        std::cout << format3(*r.F_lower);
      else
        std::cout << "[" << format3(*r.F_lower) << "," << format3(*r.F_upper)
                  << "]";
    }
    if (r.T) std::cout << " T=" << format3(*r.T);
    std::cout << (r.proven ? "" : " (unproven)") << "\n";
    all_proven = all_proven && r.proven;
  }
  std::cout << "wrote " << path("network-measurements.csv") << " and "
            << path("optimal-partitions.csv") << "\n";
  if (require_proven && !all_proven) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural balance measurements for signed directed networks"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Run the full pipeline from a config");
  std::string config_path, analyze_out;
  bool json_mirror = false, analyze_require_proven = false;
  analyze_cmd->add_option("--config", config_path, "JSON dataset config")
      ->required();
  analyze_cmd->add_option("--out", analyze_out, "Output directory");
  analyze_cmd->add_flag("--json", json_mirror, "Also write JSON mirrors");
  analyze_cmd->add_flag("--require-proven", analyze_require_proven,
                        "Exit 3 unless every network is solved to optimality");

  // solve
  auto* solve_cmd =
      app.add_subcommand("solve", "Exact frustration index of one network");
  std::string solve_input, solve_out;
  IngestFlags solve_flags;
  SolveOptions solve_opts;
  std::size_t enumerate_cap = 0;
  bool solve_require_proven = false;
  solve_cmd->add_option("input", solve_input, "Edge list (csv) or gml file")
      ->required();
  add_ingest_flags(solve_cmd, solve_flags);
  solve_cmd->add_option("--time-budget", solve_opts.time_budget_s,
                        "Wall-clock budget in seconds");
  solve_cmd->add_option("--node-budget", solve_opts.node_budget,
                        "Branch-and-bound node budget");
  solve_cmd->add_option("--restarts", solve_opts.restarts,
                        "Local-search restarts");
  solve_cmd->add_option("--seed", solve_opts.seed, "Local-search seed");
  solve_cmd->add_option("--enumerate-optima", enumerate_cap,
                        "List every optimal partition (up to CAP)");
  solve_cmd->add_flag("--require-proven", solve_require_proven,
                      "Exit 3 unless solved to optimality");
  solve_cmd->add_option("--out", solve_out, "Partition export file");

  // census
  auto* census_cmd =
      app.add_subcommand("census", "Triad census of one network");
  std::string census_input;
  IngestFlags census_flags;
  census_cmd->add_option("input", census_input, "Edge list (csv) or gml file")
      ->required();
  add_ingest_flags(census_cmd, census_flags);

  // correlate
  auto* corr_cmd = app.add_subcommand(
      "correlate", "Pearson r between two numeric CSV columns");
  std::string corr_file, corr_x, corr_y;
  corr_cmd->add_option("file", corr_file, "CSV file")->required();
  corr_cmd->add_option("--x", corr_x, "First column name")->required();
  corr_cmd->add_option("--y", corr_y, "Second column name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd)
      return run_analyze(config_path, analyze_out, json_mirror,
                         analyze_require_proven);
    if (*solve_cmd)
      return run_solve(solve_input, solve_flags, solve_opts, enumerate_cap,
                       solve_require_proven, solve_out);
    if (*census_cmd) return run_census(census_input, census_flags);
    if (*corr_cmd) return run_correlate(corr_file, corr_x, corr_y);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
