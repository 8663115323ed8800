#include "sgbalance/meso.hpp"

#include <algorithm>
#include <cmath>

namespace sgb {

SplitResult internal_external_split(const SignedDigraph& g,
                                    const Partition& p) {
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  SplitResult r;
  for (const Edge& e : g.edges()) {
    if (p.side(e.src) == p.side(e.dst))
      r.internal.push_back(e);
    else
      r.external.push_back(e);
  }
  return r;
}

std::optional<double> cohesiveness(const SignedDigraph& g,
                                   const Partition& p) {
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  std::size_t internal = 0, internal_pos = 0;
  for (const Edge& e : g.edges()) {
    if (p.side(e.src) != p.side(e.dst)) continue;
    ++internal;
    if (e.sign == Sign::plus) ++internal_pos;
  }
  if (internal == 0) return std::nullopt;
  return static_cast<double>(internal_pos) / static_cast<double>(internal);
}

std::optional<double> divisiveness(const SignedDigraph& g,
                                   const Partition& p) {
  if (p.size() != g.n())
    throw UnknownNode("partition does not cover the graph's nodes");
  std::size_t external = 0, external_neg = 0;
  for (const Edge& e : g.edges()) {
    if (p.side(e.src) == p.side(e.dst)) continue;
    ++external;
    if (e.sign == Sign::minus) ++external_neg;
  }
  if (external == 0) return std::nullopt;
  return static_cast<double>(external_neg) / static_cast<double>(external);
}

namespace {

double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

MesoReport meso_report(const SignedDigraph& g,
                       const std::vector<Partition>& optima) {
  if (optima.empty()) throw InconsistentOptima("no optima supplied");
  long score = frustration_count(g, optima.front());
  for (const auto& p : optima)
    if (frustration_count(g, p) != score)
      throw InconsistentOptima("optima have differing frustration counts");

  MesoReport report;
  bool have_canonical = false;
  Partition canonical_form;
  for (const auto& p : optima) {
    MesoReport::Entry e;
    e.partition = p.canonical();
    e.C = cohesiveness(g, p);
    e.D = divisiveness(g, p);
    report.per_optimum.push_back(e);
    if (!have_canonical || e.partition < canonical_form) {
      canonical_form = e.partition;
      have_canonical = true;
    }
  }
  for (const auto& e : report.per_optimum) {
    if (e.partition == canonical_form) {
      report.canonical_C = e.C;
      report.canonical_D = e.D;
      break;
    }
  }
  std::vector<double> cs, ds;
  for (const auto& e : report.per_optimum) {
    if (e.C) cs.push_back(*e.C);
    if (e.D) ds.push_back(*e.D);
  }
  report.C_stddev = sample_stddev(cs);
  report.D_stddev = sample_stddev(ds);
  return report;
}

}  // namespace sgb
