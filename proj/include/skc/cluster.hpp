#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "skc/graph.hpp"
#include "skc/partition.hpp"

namespace skc {

/// How the packing radius R is chosen. Paper mode derives it from the graph
/// alone; it is tiny on most real inputs (~1/(26 d_max sqrt(nk))), so Scaled
/// multiplies it by gamma and Explicit bypasses it entirely.
enum class RadiusMode { Paper, Scaled, Explicit };

struct GreedyConfig {
  int k = 2;
  RadiusMode radius_mode = RadiusMode::Paper;
  double radius_scale = 1.0;  // Scaled: R = radius_scale * paper value
  double radius = 0.0;        // Explicit: R as given
  double epsilon = 0.0;       // fast variant sampling accuracy, > 0
  std::uint64_t seed = 1;     // fast variant sampling stream
  // Test hook: make the fast variant scan all of V_{i-1} instead of sampling.
  // With this set its output must match greedy_cluster bit for bit.
  bool force_full_sample = false;
};

double paper_radius(const Graph& g, int k);
double resolve_radius(const Graph& g, const GreedyConfig& cfg);

/// One greedy iteration. center == -1 records an iteration that found the
/// active set already empty.
struct TraceStep {
  int iter = 0;  // 1-based, runs 1..k-1
  int center = -1;
  int ball_size = 0;
  int remaining = 0;
  std::vector<int> sampled_ids;  // fast variant: the drawn candidates, in order
};

struct ClusterTrace {
  std::vector<TraceStep> steps;
  double radius = 0.0;  // resolved R; balls use 2R
  bool exhausted_early = false;
};

/// |{w in active : ||emb.row(center) - emb.row(w)|| <= radius}|. The bound is
/// inclusive and the center itself always counts. Comparison is on squared
/// norms; callers replaying cluster decisions get identical results.
int ball_count(const Eigen::MatrixXd& emb, int center, double radius,
               const std::vector<int>& active);

/// Peels off k-1 balls of radius 2R, each centered on the active vertex whose
/// ball swallows the most of what remains (ties to the lowest id), then dumps
/// the leftovers into cluster k-1. Runs in O(k n^2) embedding-distance checks.
std::pair<Partition, ClusterTrace> greedy_cluster(const Graph& g,
                                                  const Eigen::MatrixXd& emb,
                                                  const GreedyConfig& cfg);

/// Same peeling, but each iteration only scores a uniformly-with-replacement
/// sample of min(|V_{i-1}|, ceil(4/epsilon * ln n)) candidates. Ball counts
/// are still taken over the full active set. Deterministic given cfg.seed.
std::pair<Partition, ClusterTrace> fast_cluster(const Graph& g,
                                                const Eigen::MatrixXd& emb,
                                                const GreedyConfig& cfg);

/// Lloyd's algorithm on the embedding rows. Initial centers are k distinct
/// input points chosen by seeded uniform sampling. A point keeps its current
/// cluster on distance ties, which is what makes degenerate inputs (all
/// points equal) settle instead of oscillating. Clusters that lose all their
/// points are re-seeded to the point farthest from its own center.
Partition kmeans_baseline(const Eigen::MatrixXd& emb, int k, std::uint64_t seed,
                          int max_iter = 100);

}  // namespace skc
