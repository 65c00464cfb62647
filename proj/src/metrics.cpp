#include "skc/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "skc/assignment.hpp"
#include "skc/errors.hpp"

namespace skc {

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw UsageError("empty vertex subset");
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.num_vertices())
      throw UsageError("vertex " + std::to_string(v) + " out of range");
    if (in[v]) throw UsageError("duplicate vertex " + std::to_string(v) + " in subset");
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::int64_t cut_size(const Graph& g, const std::vector<int>& s) {
  const auto in = membership(g, s);
  std::int64_t cut = 0;
  for (int u : s)
    for (int x : g.neighbors(u))
      if (!in[x]) ++cut;
  return cut;
}

double external_conductance(const Graph& g, const std::vector<int>& s) {
  const std::int64_t cut = cut_size(g, s);
  const std::int64_t vol = g.volume(s);
  if (vol == 0) throw DataError("subset has zero volume; conductance undefined");
  return double(cut) / double(vol);
}

InternalConductance internal_conductance(const Graph& g, const std::vector<int>& s,
                                         ConductanceMode mode, int brute_limit) {
  if (s.size() < 2)
    throw UsageError("internal conductance needs |S| >= 2; no subset of a singleton "
                     "satisfies the half-volume constraint");
  const auto sub = induced_subgraph(g, s);
  const Graph& h = sub.graph;
  const int ns = h.num_vertices();

  InternalConductance out;
  if (!h.connected()) {
    // Some component is a cut with no crossing edges, so the minimum is 0,
    // certified without touching the eigensolver.
    out.disconnected = true;
    if (mode == ConductanceMode::Exact) out.exact = 0.0;
    return out;
  }

  if (mode == ConductanceMode::Exact && ns > brute_limit)
    throw UsageError("exact conductance asked for " + std::to_string(ns) +
                     " vertices, limit is " + std::to_string(brute_limit));

  // Connected on >= 2 vertices, so the normalized Laplacian is defined.
  const Spectrum sp = compute_spectrum(h, 2);
  out.lower = sp.values[1] / 2.0;

  // Sweep the second eigenvector: every prefix of the sorted embedding is a
  // cut candidate, scored on its smaller-volume side.
  {
    const Eigen::MatrixXd pts = embed(h, sp, 2);
    std::vector<int> order(ns);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (pts(a, 1) != pts(b, 1)) return pts(a, 1) < pts(b, 1);
      return a < b;
    });
    std::vector<char> taken(ns, 0);
    std::int64_t cut = 0, vol_prefix = 0;
    const std::int64_t vol_total = h.total_volume();
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t + 1 < ns; ++t) {
      const int u = order[t];
      std::int64_t inside = 0;
      for (int x : h.neighbors(u)) inside += taken[x];
      cut += h.degree(u) - 2 * inside;
      vol_prefix += h.degree(u);
      taken[u] = 1;
      const std::int64_t side = std::min(vol_prefix, vol_total - vol_prefix);
      if (side > 0) best = std::min(best, double(cut) / double(side));
    }
    out.upper = best;
  }

  if (mode == ConductanceMode::Exact) {
    if (ns > 30) throw UsageError("exact conductance limited to 30 vertices");
    const std::uint32_t full = (ns == 30) ? 0x3fffffffu : ((1u << ns) - 1);
    std::vector<std::uint32_t> adj(ns, 0);
    for (int u = 0; u < ns; ++u)
      for (int x : h.neighbors(u)) adj[u] |= (1u << x);
    const std::int64_t vol_total = h.total_volume();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      std::int64_t vol = 0;
      for (std::uint32_t m = mask; m; m &= m - 1) vol += h.degree(std::countr_zero(m));
      if (2 * vol > vol_total) continue;
      if (vol == 0) {
        best = 0.0;
        break;
      }
      std::int64_t cut = 0;
      for (std::uint32_t m = mask; m; m &= m - 1)
        cut += std::popcount(adj[std::countr_zero(m)] & ~mask);
      best = std::min(best, double(cut) / double(vol));
    }
    out.exact = best;
  }
  return out;
}

StrengthReport strength_report(const Graph& g, const Partition& p,
                               const StrengthOptions& options) {
  p.validate();
  if (p.n() != g.num_vertices())
    throw UsageError("partition covers " + std::to_string(p.n()) + " vertices, graph has " +
                     std::to_string(g.num_vertices()));

  StrengthReport rep;
  rep.alpha_in_lower = std::numeric_limits<double>::infinity();
  rep.alpha_in_upper = std::numeric_limits<double>::infinity();

  const auto clusters = p.clusters();
  for (int j = 0; j < p.k; ++j) {
    const auto& members = clusters[j];
    if (members.empty())
      throw DataError("cluster " + std::to_string(j) +
                      " is empty; strength is undefined for empty clusters (a greedy "
                      "run that exhausted V early flags this in its trace)");
    ClusterStrength cs;
    cs.id = j;
    cs.size = static_cast<int>(members.size());
    cs.phi_out = external_conductance(g, members);
    if (members.size() == 1) {
      cs.degenerate = true;
      rep.any_degenerate = true;
    } else {
      const auto mode = cs.size <= options.brute_limit ? ConductanceMode::Exact
                                                       : ConductanceMode::Bounds;
      cs.phi_in = internal_conductance(g, members, mode, options.brute_limit);
    }
    rep.alpha_out = std::max(rep.alpha_out, cs.phi_out);
    const double lo = cs.phi_in.exact ? *cs.phi_in.exact : cs.phi_in.lower;
    const double hi = cs.phi_in.exact ? *cs.phi_in.exact : cs.phi_in.upper;
    rep.alpha_in_lower = std::min(rep.alpha_in_lower, lo);
    rep.alpha_in_upper = std::min(rep.alpha_in_upper, hi);
    rep.clusters.push_back(std::move(cs));
  }
  return rep;
}

Verdict judge_strength(const StrengthReport& report, double alpha_in, double alpha_out) {
  if (report.any_degenerate) return Verdict::NotStrong;
  if (report.alpha_out > alpha_out) return Verdict::NotStrong;
  if (report.alpha_in_upper < alpha_in) return Verdict::NotStrong;
  if (report.alpha_in_lower >= alpha_in) return Verdict::Strong;
  return Verdict::Unknown;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Strong: return "strong";
    case Verdict::NotStrong: return "not-strong";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

PartitionDistance partition_distance(const Partition& a, const Partition& b) {
  a.validate();
  b.validate();
  if (a.n() != b.n())
    throw UsageError("partitions cover " + std::to_string(a.n()) + " and " +
                     std::to_string(b.n()) + " vertices");

  // Pad to a common k with empty clusters; |A symdiff emptyset| = |A| falls
  // out of the overlap matrix being zero there.
  const int k = std::max(a.k, b.k);
  std::vector<std::vector<std::int64_t>> cost(k, std::vector<std::int64_t>(k, 0));
  for (int v = 0; v < a.n(); ++v) --cost[a.labels[v]][b.labels[v]];

  PartitionDistance out;
  const std::int64_t best_overlap = -min_cost_assignment(cost, out.sigma);
  out.distance = 2 * (std::int64_t(a.n()) - best_overlap);
  return out;
}

EmbeddingInvariants embedding_invariants(const Graph& g, const Spectrum& s) {
  const int k = static_cast<int>(s.vectors.cols());
  const Eigen::MatrixXd x = embed(g, s, k);
  EmbeddingInvariants inv;
  inv.rayleigh.assign(k, 0.0);
  inv.norms.assign(k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (const auto& [u, v] : g.edges()) {
      const double d = x(u, i) - x(v, i);
      inv.rayleigh[i] += d * d;
    }
    for (int u = 0; u < g.num_vertices(); ++u)
      inv.norms[i] += double(g.degree(u)) * x(u, i) * x(u, i);
  }
  return inv;
}

ConcentrationReport concentration_check(const Graph& g, const Eigen::MatrixXd& emb,
                                        const Partition& p, double lambda_k,
                                        double alpha_in) {
  p.validate();
  if (p.n() != g.num_vertices()) throw UsageError("partition does not match graph");
  if (alpha_in <= 0.0) throw UsageError("alpha_in must be positive");
  const int k = p.k;
  if (emb.rows() != g.num_vertices() || emb.cols() != k)
    throw UsageError("embedding must be n x k with k = cluster count");

  const auto clusters = p.clusters();
  for (int j = 0; j < k; ++j)
    if (clusters[j].empty())
      throw DataError("cluster " + std::to_string(j) + " is empty");

  ConcentrationReport rep;
  rep.r.assign(k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (const auto& members : clusters) {
      double mean = 0.0;
      for (int u : members) mean += emb(u, i);
      mean /= double(members.size());
      for (int u : members) {
        const double d = emb(u, i) - mean;
        rep.r[i] += d * d;
      }
    }
  }

  const double dmax = g.max_degree();
  const double denom = alpha_in * alpha_in;
  rep.bound_dmax_cubed = 2.0 * k * lambda_k * dmax * dmax * dmax / denom;
  rep.bound_dmax_linear = 2.0 * k * lambda_k * dmax / denom;
  rep.within_dmax_cubed = true;
  rep.within_dmax_linear = true;
  for (double r : rep.r) {
    if (r > rep.bound_dmax_cubed) rep.within_dmax_cubed = false;
    if (r > rep.bound_dmax_linear) rep.within_dmax_linear = false;
  }
  return rep;
}

PairsumReport pairsum_check(const Graph& g, const Eigen::MatrixXd& emb, double lambda_k,
                            const std::vector<int>& cluster, double phi_in_lower) {
  if (phi_in_lower <= 0.0)
    throw UsageError("the pair bound needs a positive phi_in lower bound");
  membership(g, cluster);  // validates non-empty, in-range, duplicate-free
  if (emb.rows() != g.num_vertices())
    throw UsageError("embedding does not match graph");

  const double vol = double(g.volume(cluster));
  const double rhs = 4.0 * lambda_k * vol / (phi_in_lower * phi_in_lower);
  const double m = double(cluster.size());

  PairsumReport rep;
  for (int i = 0; i < emb.cols(); ++i) {
    double sum = 0.0, sumsq = 0.0;
    for (int u : cluster) {
      sum += emb(u, i);
      sumsq += emb(u, i) * emb(u, i);
    }
    // sum over ordered pairs (u,v) of (x(u)-x(v))^2, expanded; clamped since
    // cancellation can leave a tiny negative where the true value is 0
    const double lhs = std::max(0.0, 2.0 * m * sumsq - 2.0 * sum * sum);
    rep.entries.push_back({i + 1, lhs, rhs});
    if (lhs > rhs) rep.ok = false;
  }
  return rep;
}

GapReport gap_report(const Spectrum& s, int k, const StrengthReport* strength) {
  if (k < 1) throw UsageError("k must be >= 1");
  if (static_cast<int>(s.values.size()) < k + 1)
    throw UsageError("need " + std::to_string(k + 1) + " eigenvalues, got " +
                     std::to_string(s.values.size()));

  constexpr double kKernelTol = 1e-12;
  GapReport rep;
  rep.lambda_k = s.values[k - 1];
  rep.lambda_k_plus_1 = s.values[k];
  if (rep.lambda_k < kKernelTol) {
    if (rep.lambda_k_plus_1 < kKernelTol) {
      rep.ratio = 0.0;
    } else {
      rep.ratio = std::numeric_limits<double>::infinity();
      rep.ratio_infinite = true;
    }
  } else {
    rep.ratio = rep.lambda_k_plus_1 / (double(k) * double(k) * std::sqrt(rep.lambda_k));
  }
  if (strength)
    rep.cheeger_bound_ok = rep.lambda_k <= 2.0 * strength->alpha_out + 1e-9;
  return rep;
}

}  // namespace skc
