#include "skc/generator.hpp"

#include <numeric>
#include <string>

#include "skc/errors.hpp"
#include "skc/rng.hpp"

namespace skc {

void PlantedModel::validate() const {
  if (block_sizes.empty()) throw UsageError("planted model needs at least one block");
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    if (block_sizes[b] < 1)
      throw UsageError("block " + std::to_string(b) + " has size " +
                       std::to_string(block_sizes[b]) + ", need >= 1");
  }
  if (!(p_in >= p_mid && p_mid >= p_out))
    throw UsageError("need p_in >= p_mid >= p_out");
  if (p_in > 1.0 || p_out < 0.0)
    throw UsageError("edge probabilities must lie in [0, 1]");

  if (!supergroups.empty()) {
    std::vector<int> seen(block_sizes.size(), 0);
    for (const auto& g : supergroups) {
      if (g.empty()) throw UsageError("empty supergroup");
      for (int b : g) {
        if (b < 0 || b >= num_blocks())
          throw UsageError("supergroup refers to unknown block " + std::to_string(b));
        if (seen[b]++) throw UsageError("block " + std::to_string(b) + " in two supergroups");
      }
    }
    for (int b = 0; b < num_blocks(); ++b)
      if (!seen[b]) throw UsageError("block " + std::to_string(b) + " not in any supergroup");
  }
}

int PlantedModel::num_vertices() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

std::vector<std::vector<int>> default_supergroups(int num_blocks) {
  if (num_blocks <= 2) {
    std::vector<int> all(num_blocks);
    std::iota(all.begin(), all.end(), 0);
    return {all};
  }
  std::vector<int> rest(num_blocks - 2);
  std::iota(rest.begin(), rest.end(), 2);
  return {{0, 1}, rest};
}

PlantedGraph generate_planted(const PlantedModel& model, std::uint64_t seed) {
  model.validate();

  const int n = model.num_vertices();
  const int num_blocks = model.num_blocks();

  std::vector<int> block_of(n);
  {
    int v = 0;
    for (int b = 0; b < num_blocks; ++b)
      for (int i = 0; i < model.block_sizes[b]; ++i) block_of[v++] = b;
  }

  auto groups = model.supergroups;
  if (groups.empty()) groups = default_supergroups(num_blocks);
  std::vector<int> group_of_block(num_blocks, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (int b : groups[g]) group_of_block[b] = static_cast<int>(g);

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double p;
      if (block_of[u] == block_of[v])
        p = model.p_in;
      else if (group_of_block[block_of[u]] == group_of_block[block_of[v]])
        p = model.p_mid;
      else
        p = model.p_out;
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }

  PlantedGraph out{Graph(n, edges), Partition{}, Partition{}};
  out.blocks.labels = block_of;
  out.blocks.k = num_blocks;
  out.supergroups.labels.resize(n);
  for (int v = 0; v < n; ++v) out.supergroups.labels[v] = group_of_block[block_of[v]];
  out.supergroups.k = static_cast<int>(groups.size());
  return out;
}

}  // namespace skc
