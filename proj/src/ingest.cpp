#include "sgbalance/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace sgb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, delim)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end())
    throw MissingColumn("column '" + name + "' not found in header");
  return static_cast<std::size_t>(it - header.begin());
}

double parse_weight(const std::string& cell) {
  std::size_t used = 0;
  double w = 0;
  try {
    w = std::stod(cell, &used);
  } catch (const std::exception&) {
    throw UnparsableWeight("cannot parse weight '" + cell + "'");
  }
  if (used != cell.size() || !std::isfinite(w))
    throw UnparsableWeight("cannot parse weight '" + cell + "'");
  return w;
}

}  // namespace

std::vector<RawRecord> parse_edge_csv(std::istream& in,
                                      const CsvSchema& schema) {
  std::string line;
  if (!next_line(in, line)) throw EmptyFile("no header row");
  auto header = split_line(line, schema.delimiter);
  std::size_t src_col = find_column(header, schema.source);
  std::size_t dst_col = find_column(header, schema.target);
  std::size_t w_col = find_column(header, schema.weight);
  std::optional<std::size_t> layer_col, time_col;
  if (!schema.layer.empty()) layer_col = find_column(header, schema.layer);
  if (!schema.time.empty()) time_col = find_column(header, schema.time);

  std::vector<RawRecord> records;
  while (next_line(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split_line(line, schema.delimiter);
    std::size_t needed = std::max({src_col, dst_col, w_col,
                                   layer_col.value_or(0),
                                   time_col.value_or(0)});
    if (cells.size() <= needed)
      throw MissingColumn("row has fewer cells than the mapped columns");
    RawRecord r;
    r.source = cells[src_col];
    r.target = cells[dst_col];
    r.weight = parse_weight(cells[w_col]);
    if (layer_col) r.layer = cells[*layer_col];
    if (time_col) r.time = cells[*time_col];
    records.push_back(std::move(r));
  }
  if (records.empty()) throw EmptyFile("no data rows");
  return records;
}

namespace {

// Minimal GML tokenizer: brackets, quoted strings, bare words/numbers.
struct GmlToken {
  enum class Kind { open, close, word, string, number, end } kind;
  std::string text;
  double number = 0;
};

class GmlLexer {
 public:
  explicit GmlLexer(std::istream& in) : in_(in) {}

  GmlToken next() {
    int c = in_.get();
    while (c != EOF && std::isspace(c)) c = in_.get();
    if (c == EOF) return {GmlToken::Kind::end, "", 0};
    if (c == '[') return {GmlToken::Kind::open, "[", 0};
    if (c == ']') return {GmlToken::Kind::close, "]", 0};
    if (c == '"') {
      std::string s;
      c = in_.get();
      while (c != EOF && c != '"') {
        s.push_back(static_cast<char>(c));
        c = in_.get();
      }
      if (c == EOF) throw MalformedGml("unterminated string");
      return {GmlToken::Kind::string, s, 0};
    }
    if (c == '#') {  // comment to end of line
      while (c != EOF && c != '\n') c = in_.get();
      return next();
    }
    std::string word;
    while (c != EOF && !std::isspace(c) && c != '[' && c != ']') {
      word.push_back(static_cast<char>(c));
      c = in_.get();
    }
    if (c != EOF) in_.unget();
    std::size_t used = 0;
    try {
      double num = std::stod(word, &used);
      if (used == word.size()) return {GmlToken::Kind::number, word, num};
    } catch (const std::exception&) {
    }
    return {GmlToken::Kind::word, word, 0};
  }

 private:
  std::istream& in_;
};

// Skips a value after an unrecognized key (scalar or bracketed block).
void skip_value(GmlLexer& lex) {
  GmlToken t = lex.next();
  if (t.kind == GmlToken::Kind::open) {
    int depth = 1;
    while (depth > 0) {
      GmlToken u = lex.next();
      if (u.kind == GmlToken::Kind::end)
        throw MalformedGml("unterminated block");
      if (u.kind == GmlToken::Kind::open) ++depth;
      if (u.kind == GmlToken::Kind::close) --depth;
    }
  } else if (t.kind == GmlToken::Kind::end ||
             t.kind == GmlToken::Kind::close) {
    throw MalformedGml("key without value");
  }
}

long long require_integer(const GmlToken& t, const std::string& key) {
  if (t.kind != GmlToken::Kind::number)
    throw MalformedGml("expected a number for '" + key + "'");
  double r = std::round(t.number);
  if (r != t.number)
    throw MalformedGml("expected an integer for '" + key + "'");
  return static_cast<long long>(r);
}

}  // namespace

SignedDigraph parse_gml(std::istream& in) {
  GmlLexer lex(in);

  // Find the top-level graph block.
  GmlToken t = lex.next();
  while (t.kind == GmlToken::Kind::word && t.text != "graph") {
    skip_value(lex);
    t = lex.next();
  }
  if (t.kind != GmlToken::Kind::word || t.text != "graph")
    throw MalformedGml("no graph block");
  t = lex.next();
  if (t.kind != GmlToken::Kind::open)
    throw MalformedGml("graph block must open with [");

  std::vector<NodeId> node_ids;
  std::vector<EdgeTriple> triples;

  while (true) {
    t = lex.next();
    if (t.kind == GmlToken::Kind::close) break;
    if (t.kind == GmlToken::Kind::end)
      throw MalformedGml("unterminated graph block");
    if (t.kind != GmlToken::Kind::word)
      throw MalformedGml("expected a key inside graph block");

    if (t.text == "node") {
      GmlToken open = lex.next();
      if (open.kind != GmlToken::Kind::open)
        throw MalformedGml("node block must open with [");
      std::optional<long long> id;
      while (true) {
        GmlToken k = lex.next();
        if (k.kind == GmlToken::Kind::close) break;
        if (k.kind != GmlToken::Kind::word)
          throw MalformedGml("expected a key inside node block");
        if (k.text == "id") {
          id = require_integer(lex.next(), "id");
        } else {
          skip_value(lex);
        }
      }
      if (!id) throw MalformedGml("node without id");
      node_ids.push_back(std::to_string(*id));
    } else if (t.text == "edge") {
      GmlToken open = lex.next();
      if (open.kind != GmlToken::Kind::open)
        throw MalformedGml("edge block must open with [");
      std::optional<long long> src, dst, sign;
      while (true) {
        GmlToken k = lex.next();
        if (k.kind == GmlToken::Kind::close) break;
        if (k.kind != GmlToken::Kind::word)
          throw MalformedGml("expected a key inside edge block");
        if (k.text == "source") {
          src = require_integer(lex.next(), "source");
        } else if (k.text == "target") {
          dst = require_integer(lex.next(), "target");
        } else if (k.text == "sign") {
          sign = require_integer(lex.next(), "sign");
        } else {
          skip_value(lex);
        }
      }
      if (!src || !dst || !sign)
        throw MalformedGml("edge missing source/target/sign");
      if (*sign != 1 && *sign != -1)
        throw InvalidSign("edge sign must be +1 or -1");
      triples.push_back(
          {std::to_string(*src), std::to_string(*dst), *sign});
    } else {
      skip_value(lex);
    }
  }

  // Keep declared nodes even when isolated.
  std::vector<NodeId> all = node_ids;
  for (const auto& tr : triples) {
    all.push_back(tr.source);
    all.push_back(tr.target);
  }
  std::sort(all.begin(), all.end(), node_id_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  SignedDigraph base = build_graph(triples);
  if (base.n() == all.size()) return base;
  std::vector<Edge> edges;
  edges.reserve(base.m());
  auto reindex = [&](const NodeId& id) {
    auto it = std::lower_bound(all.begin(), all.end(), id, node_id_less);
    return static_cast<NodeIndex>(it - all.begin());
  };
  for (const Edge& e : base.edges())
    edges.push_back({reindex(base.node(e.src)), reindex(base.node(e.dst)),
                     e.sign});
  return build_graph_indexed(std::move(all), std::move(edges));
}

SignRule SignRule::sign_only() { return SignRule{}; }

SignRule SignRule::threshold(double min_abs) {
  SignRule r;
  r.variant = Variant::threshold;
  if (!(min_abs > 0)) throw ConfigError("threshold min_abs must be > 0");
  r.min_abs = min_abs;
  return r;
}

SignRule SignRule::rank_top_bottom(int top_k, int bottom_k, int rank_max) {
  SignRule r;
  r.variant = Variant::rank_top_bottom;
  if (top_k < 0 || bottom_k < 0 || rank_max < 2 ||
      top_k + bottom_k > rank_max - 1)
    throw ConfigError("rank rule requires top_k + bottom_k <= rank_max - 1");
  r.top_k = top_k;
  r.bottom_k = bottom_k;
  r.rank_max = rank_max;
  return r;
}

namespace {

long long weight_sign(double w, const char* context) {
  if (w == 0) throw ZeroWeight(std::string("zero weight under ") + context);
  return w > 0 ? +1 : -1;
}

std::vector<EdgeTriple> apply_rank_rule(const std::vector<RawRecord>& records,
                                        const SignRule& rule) {
  int slots = rule.rank_max - 1;
  // Validate every rating group as a complete strict ranking 1..rank_max-1.
  using Key = std::tuple<std::string, std::string, NodeId>;
  std::map<Key, std::vector<int>> groups;
  for (const auto& r : records) {
    double rounded = std::round(r.weight);
    if (rounded != r.weight || r.weight < 1 || r.weight > slots)
      throw IncompleteRanking("rank " + std::to_string(r.weight) +
                              " outside 1.." + std::to_string(slots));
    groups[{r.time, r.layer, r.source}].push_back(
        static_cast<int>(rounded));
  }
  for (auto& [key, ranks] : groups) {
    std::vector<char> seen(static_cast<std::size_t>(slots) + 1, 0);
    for (int rk : ranks) {
      if (seen[static_cast<std::size_t>(rk)])
        throw IncompleteRanking("duplicate rank " + std::to_string(rk) +
                                " for rater " + std::get<2>(key));
      seen[static_cast<std::size_t>(rk)] = 1;
    }
    if (ranks.size() != static_cast<std::size_t>(slots))
      throw IncompleteRanking("rater " + std::get<2>(key) + " lists " +
                              std::to_string(ranks.size()) + " of " +
                              std::to_string(slots) + " ranks");
  }
  std::vector<EdgeTriple> out;
  for (const auto& r : records) {
    int rank = static_cast<int>(r.weight);
    if (rank <= rule.top_k)
      out.push_back({r.source, r.target, +1});
    else if (rank > slots - rule.bottom_k)
      out.push_back({r.source, r.target, -1});
  }
  return out;
}

}  // namespace

std::vector<EdgeTriple> apply_sign_rule(const std::vector<RawRecord>& records,
                                        const SignRule& rule) {
  std::vector<EdgeTriple> out;
  switch (rule.variant) {
    case SignRule::Variant::sign_only:
      out.reserve(records.size());
      for (const auto& r : records)
        out.push_back(
            {r.source, r.target, weight_sign(r.weight, "sign_only")});
      return out;
    case SignRule::Variant::threshold:
      for (const auto& r : records) {
        if (r.weight == 0)
          throw ZeroWeight("zero weight under threshold");
        if (std::abs(r.weight) >= rule.min_abs)
          out.push_back(
              {r.source, r.target, weight_sign(r.weight, "threshold")});
      }
      return out;
    case SignRule::Variant::rank_top_bottom:
      return apply_rank_rule(records, rule);
  }
  throw ConfigError("unknown sign rule variant");
}

SignedDigraph symmetrize(const SignedDigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    auto back = g.edge_sign(e.dst, e.src);
    if (!back) {
      edges.push_back({e.dst, e.src, e.sign});
    } else if (*back != e.sign) {
      throw ConflictingSign("reciprocal pair " + g.node(e.src) + "," +
                            g.node(e.dst) + " carries both signs");
    }
  }
  return build_graph_indexed(g.nodes(), std::move(edges));
}

}  // namespace sgb
