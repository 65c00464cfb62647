#include "skc/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skc/errors.hpp"
#include "skc/rng.hpp"

namespace skc {

double paper_radius(const Graph& g, int k) {
  if (k < 1) throw UsageError("k must be >= 1");
  const double n = g.num_vertices();
  const double dmax = g.max_degree();
  if (dmax == 0) throw DataError("graph has no edges; packing radius undefined");
  return 1.0 / (26.0 * dmax * std::sqrt(n * double(k)));
}

double resolve_radius(const Graph& g, const GreedyConfig& cfg) {
  switch (cfg.radius_mode) {
    case RadiusMode::Paper:
      return paper_radius(g, cfg.k);
    case RadiusMode::Scaled:
      if (cfg.radius_scale <= 0.0) throw UsageError("radius scale must be > 0");
      return cfg.radius_scale * paper_radius(g, cfg.k);
    case RadiusMode::Explicit:
      if (cfg.radius <= 0.0) throw UsageError("explicit radius must be > 0");
      return cfg.radius;
  }
  throw UsageError("unknown radius mode");
}

int ball_count(const Eigen::MatrixXd& emb, int center, double radius,
               const std::vector<int>& active) {
  bool center_active = false;
  for (int w : active)
    if (w == center) {
      center_active = true;
      break;
    }
  if (!center_active)
    throw UsageError("center " + std::to_string(center) + " is not in the active set");
  const double r2 = radius * radius;
  int count = 0;
  for (int w : active)
    if ((emb.row(center) - emb.row(w)).squaredNorm() <= r2) ++count;
  return count;
}

namespace {

void check_cluster_inputs(const Graph& g, const Eigen::MatrixXd& emb,
                          const GreedyConfig& cfg) {
  if (cfg.k < 2) throw UsageError("clustering needs k >= 2");
  if (emb.rows() != g.num_vertices())
    throw UsageError("embedding has " + std::to_string(emb.rows()) +
                     " rows, graph has " + std::to_string(g.num_vertices()) + " vertices");
  if (emb.cols() != cfg.k)
    throw UsageError("embedding dimension " + std::to_string(emb.cols()) +
                     " does not match k = " + std::to_string(cfg.k));
  if (g.num_vertices() > 0 && g.min_degree() == 0)
    throw DataError("graph has isolated vertices; embed them out before clustering");
}

// Removes the ball around `center` from `active`, labels it, and returns its
// size. `active` stays ascending.
int peel_ball(const Eigen::MatrixXd& emb, int center, double r2, std::vector<int>& active,
              std::vector<int>& labels, int label) {
  std::vector<int> kept;
  kept.reserve(active.size());
  int taken = 0;
  for (int w : active) {
    if ((emb.row(center) - emb.row(w)).squaredNorm() <= r2) {
      labels[w] = label;
      ++taken;
    } else {
      kept.push_back(w);
    }
  }
  active.swap(kept);
  return taken;
}

std::pair<Partition, ClusterTrace> run_greedy(const Graph& g, const Eigen::MatrixXd& emb,
                                              const GreedyConfig& cfg, bool sampled) {
  check_cluster_inputs(g, emb, cfg);
  if (sampled && !cfg.force_full_sample && cfg.epsilon <= 0.0)
    throw UsageError("the sampled variant needs epsilon > 0");

  const int n = g.num_vertices();
  const double R = resolve_radius(g, cfg);
  const double r2 = (2.0 * R) * (2.0 * R);

  std::vector<int> labels(n, -1);
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  ClusterTrace trace;
  trace.radius = R;

  Rng rng(cfg.seed);
  const std::size_t target_sample =
      sampled && !cfg.force_full_sample
          ? static_cast<std::size_t>(std::ceil(4.0 / cfg.epsilon * std::log(double(n))))
          : 0;

  for (int i = 1; i < cfg.k; ++i) {
    TraceStep step;
    step.iter = i;
    if (active.empty()) {
      trace.exhausted_early = true;
      trace.steps.push_back(std::move(step));
      continue;
    }

    std::vector<int> candidates;
    if (sampled && !cfg.force_full_sample) {
      // Always a with-replacement draw, even when the size cap equals |V|:
      // the multiset can still miss vertices, and that is the contract the
      // accuracy guarantee is stated for.
      const std::size_t draws = std::min(target_sample, active.size());
      step.sampled_ids.reserve(draws);
      for (std::size_t t = 0; t < draws; ++t)
        step.sampled_ids.push_back(active[uniform_index(rng, active.size())]);
      candidates = step.sampled_ids;
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
      if (sampled) step.sampled_ids = active;
      candidates = active;
    }

    // Ascending candidate order makes "first strict improvement" the
    // lowest-id tie-break.
    int best_center = -1, best_count = -1;
    for (int u : candidates) {
      int count = 0;
      for (int w : active)
        if ((emb.row(u) - emb.row(w)).squaredNorm() <= r2) ++count;
      if (count > best_count) {
        best_count = count;
        best_center = u;
      }
    }

    step.center = best_center;
    step.ball_size = peel_ball(emb, best_center, r2, active, labels, i - 1);
    step.remaining = static_cast<int>(active.size());
    trace.steps.push_back(std::move(step));
  }

  for (int w : active) labels[w] = cfg.k - 1;
  if (active.empty()) trace.exhausted_early = true;

  Partition p;
  p.labels = std::move(labels);
  p.k = cfg.k;
  return {std::move(p), std::move(trace)};
}

}  // namespace

std::pair<Partition, ClusterTrace> greedy_cluster(const Graph& g, const Eigen::MatrixXd& emb,
                                                  const GreedyConfig& cfg) {
  return run_greedy(g, emb, cfg, false);
}

std::pair<Partition, ClusterTrace> fast_cluster(const Graph& g, const Eigen::MatrixXd& emb,
                                                const GreedyConfig& cfg) {
  return run_greedy(g, emb, cfg, true);
}

Partition kmeans_baseline(const Eigen::MatrixXd& emb, int k, std::uint64_t seed,
                          int max_iter) {
  const int n = static_cast<int>(emb.rows());
  if (k < 2) throw UsageError("k-means baseline needs k >= 2");
  if (n < k)
    throw UsageError("cannot place " + std::to_string(k) + " centers among " +
                     std::to_string(n) + " points");
  if (max_iter < 1) throw UsageError("max_iter must be >= 1");

  Rng rng(seed);

  // k distinct point indices via partial Fisher-Yates.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Eigen::MatrixXd centers(k, emb.cols());
  for (int c = 0; c < k; ++c) {
    const std::size_t pick = c + uniform_index(rng, std::uint64_t(n - c));
    std::swap(idx[c], idx[pick]);
    centers.row(c) = emb.row(idx[c]);
  }

  std::vector<int> labels(n, -1);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (int p = 0; p < n; ++p) {
      int best = 0;
      double best_d = (emb.row(p) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (emb.row(p) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      // Sticky ties: if the current cluster is as close as the best, stay.
      if (labels[p] >= 0 &&
          (emb.row(p) - centers.row(labels[p])).squaredNorm() <= best_d) {
        continue;
      }
      if (labels[p] != best) {
        labels[p] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::vector<int> counts(k, 0);
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, emb.cols());
    for (int p = 0; p < n; ++p) {
      sums.row(labels[p]) += emb.row(p);
      ++counts[labels[p]];
    }
    for (int c = 0; c < k; ++c)
      if (counts[c] > 0) centers.row(c) = sums.row(c) / double(counts[c]);
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      // Steal the point sitting farthest from its own center. Pigeonhole
      // guarantees a donor cluster with at least two points.
      int far_p = 0;
      double far_d = -1.0;
      for (int p = 0; p < n; ++p) {
        if (counts[labels[p]] <= 1) continue;
        const double d = (emb.row(p) - centers.row(labels[p])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far_p = p;
        }
      }
      --counts[labels[far_p]];
      labels[far_p] = c;
      counts[c] = 1;
      centers.row(c) = emb.row(far_p);
    }
  }

  Partition p;
  p.labels = std::move(labels);
  p.k = k;
  return p;
}

}  // namespace skc
