#pragma once

#include <cstdint>
#include <vector>

#include "skc/graph.hpp"
#include "skc/partition.hpp"

namespace skc {

/// Three-level planted partition model. Blocks are grouped into supergroups;
/// edge probability between u and v depends on how closely related their
/// blocks are:
///   same block                      -> p_in
///   same supergroup, different block -> p_mid
///   different supergroups            -> p_out
/// Requires 1 >= p_in >= p_mid >= p_out >= 0.
struct PlantedModel {
  std::vector<int> block_sizes;
  double p_in = 0.0;
  double p_mid = 0.0;
  double p_out = 0.0;
  /// Partition of block indices {0..B-1}. Empty means "use the default":
  /// blocks {0,1} vs the rest when B > 2, otherwise a single supergroup.
  std::vector<std::vector<int>> supergroups;

  void validate() const;
  int num_blocks() const { return static_cast<int>(block_sizes.size()); }
  int num_vertices() const;
};

/// The default supergroup layout for B blocks (see PlantedModel).
std::vector<std::vector<int>> default_supergroups(int num_blocks);

struct PlantedGraph {
  Graph graph;
  Partition blocks;       // ground-truth block of each vertex
  Partition supergroups;  // supergroup of each vertex
};

/// Samples one graph from the model. Vertices are numbered block by block
/// (block 0 first). Exactly one Bernoulli draw per unordered pair, in the
/// fixed order (0,1),(0,2),...,(0,n-1),(1,2),..., so the output is a pure
/// function of (model, seed).
PlantedGraph generate_planted(const PlantedModel& model, std::uint64_t seed);

}  // namespace skc
