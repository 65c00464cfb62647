#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skc/graph.hpp"
#include "skc/partition.hpp"
#include "skc/spectral.hpp"

namespace skc {

/// Edges leaving S. S must be a valid duplicate-free vertex subset.
std::int64_t cut_size(const Graph& g, const std::vector<int>& s);

/// cut(S) / vol(S), volumes taken in g. Zero-volume subsets are rejected.
double external_conductance(const Graph& g, const std::vector<int>& s);

enum class ConductanceMode { Exact, Bounds };

/// Conductance of the subgraph induced by S: the worst cut(S') / vol(S') over
/// nonempty S' with vol(S') <= vol(S)/2, everything measured inside G[S].
///
/// Both modes certify a bracket: lower = lambda_2(G[S])/2 (Cheeger), upper =
/// best sweep cut of the second eigenvector. Exact mode additionally
/// enumerates subsets, which is only allowed for |S| <= brute_limit. A
/// disconnected G[S] short-circuits to 0 (a component is a free cut) and a
/// singleton S is rejected: no nonempty proper subset can satisfy the volume
/// constraint, so the minimum ranges over nothing.
struct InternalConductance {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact;
  bool disconnected = false;
};
InternalConductance internal_conductance(const Graph& g, const std::vector<int>& s,
                                         ConductanceMode mode, int brute_limit = 20);

/// Per-cluster conductances. `degenerate` marks singleton clusters, whose
/// internal conductance is undefined; they are aggregated as 0 so any
/// positive alpha_in demand fails, and the verdict pins them to NotStrong.
struct ClusterStrength {
  int id = 0;
  int size = 0;
  double phi_out = 0.0;
  InternalConductance phi_in;
  bool degenerate = false;
};

/// alpha_out is the worst external conductance across clusters. The true
/// alpha_in (worst internal conductance) is only known to lie in
/// [alpha_in_lower, alpha_in_upper] unless every cluster was solved exactly.
struct StrengthReport {
  std::vector<ClusterStrength> clusters;
  double alpha_out = 0.0;
  double alpha_in_lower = 0.0;
  double alpha_in_upper = 0.0;
  bool any_degenerate = false;
};

struct StrengthOptions {
  // Clusters up to this size get exact internal conductance, larger ones get
  // bounds only.
  int brute_limit = 20;
};

StrengthReport strength_report(const Graph& g, const Partition& p,
                               const StrengthOptions& options = {});

/// Is the partition (alpha_in, alpha_out)-strong? Strong requires certainty:
/// alpha_in_lower >= alpha_in and alpha_out <= alpha_out. NotStrong requires
/// a certified violation: alpha_in_upper < alpha_in, alpha_out exceeded, or a
/// degenerate cluster. Anything the bounds cannot settle is Unknown.
enum class Verdict { Strong, NotStrong, Unknown };
Verdict judge_strength(const StrengthReport& report, double alpha_in, double alpha_out);
const char* verdict_name(Verdict v);

/// min over label matchings sigma of sum_i |A_i symdiff B_sigma(i)|.
/// Partitions with different k are padded with empty clusters. sigma[i] is
/// the cluster of b matched to cluster i of a (padded indices included).
struct PartitionDistance {
  std::int64_t distance = 0;
  std::vector<int> sigma;
};
PartitionDistance partition_distance(const Partition& a, const Partition& b);

/// Identities every correct (eigenvalue, embedding) pair satisfies:
/// rayleigh[i] = sum over edges (u,v) of (x_i(u)-x_i(v))^2, equal to
/// lambda_i, and norms[i] = sum_u deg(u) x_i(u)^2, equal to 1.
struct EmbeddingInvariants {
  std::vector<double> rayleigh;
  std::vector<double> norms;
};
EmbeddingInvariants embedding_invariants(const Graph& g, const Spectrum& s);

/// How far each embedding coordinate x_i sits from its best cluster-wise
/// constant approximation: r[i] = ||x_i - per-cluster means of x_i||^2.
/// Two candidate ceilings are reported, differing only in the power of d_max;
/// published analyses of this quantity disagree between the two, so both are
/// checked rather than picking one.
struct ConcentrationReport {
  std::vector<double> r;
  double bound_dmax_cubed = 0.0;
  double bound_dmax_linear = 0.0;
  bool within_dmax_cubed = false;
  bool within_dmax_linear = false;
};
ConcentrationReport concentration_check(const Graph& g, const Eigen::MatrixXd& emb,
                                        const Partition& p, double lambda_k,
                                        double alpha_in);

/// For one cluster C and each embedding coordinate i: lhs = sum over ordered
/// pairs u,v in C of (x_i(u)-x_i(v))^2, computed in O(|C|) via
/// 2|C|*sum(a^2) - 2*(sum a)^2, which must stay below
/// rhs = 4 * lambda_k * vol(C) / phi_in_lower^2. Any positive certified lower
/// bound works for phi_in_lower; an underestimate only loosens the ceiling.
struct PairsumEntry {
  int dim = 0;  // 1-based, matching the x1..xk embedding columns
  double lhs = 0.0;
  double rhs = 0.0;
};
struct PairsumReport {
  std::vector<PairsumEntry> entries;
  bool ok = true;
};
PairsumReport pairsum_check(const Graph& g, const Eigen::MatrixXd& emb, double lambda_k,
                            const std::vector<int>& cluster, double phi_in_lower);

/// ratio = lambda_{k+1} / (k^2 sqrt(lambda_k)), the figure of merit for how
/// comfortably the spectrum separates k clusters from k+1. lambda_k below
/// 1e-12 counts as zero: with lambda_{k+1} positive the ratio is infinite
/// (flagged), with both zero it is 0. cheeger_bound_ok tests
/// lambda_k <= 2 * alpha_out + 1e-9 and is only present when a strength
/// report supplies alpha_out.
struct GapReport {
  double lambda_k = 0.0;
  double lambda_k_plus_1 = 0.0;
  double ratio = 0.0;
  bool ratio_infinite = false;
  std::optional<bool> cheeger_bound_ok;
};
GapReport gap_report(const Spectrum& s, int k, const StrengthReport* strength = nullptr);

}  // namespace skc
