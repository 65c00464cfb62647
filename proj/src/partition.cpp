#include "skc/partition.hpp"

#include <algorithm>
#include <string>

#include "skc/errors.hpp"

namespace skc {

Partition Partition::from_labels(std::vector<int> labels) {
  if (labels.empty()) throw UsageError("partition needs at least one vertex");
  int max_label = -1;
  for (int l : labels) {
    if (l < 0) throw DataError("negative cluster label " + std::to_string(l));
    max_label = std::max(max_label, l);
  }
  Partition p;
  p.labels = std::move(labels);
  p.k = max_label + 1;
  return p;
}

void Partition::validate() const {
  if (k <= 0) throw UsageError("partition has no clusters");
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0 || labels[v] >= k)
      throw DataError("vertex " + std::to_string(v) + " has label " +
                      std::to_string(labels[v]) + " outside [0, " +
                      std::to_string(k) + ")");
  }
}

std::vector<int> Partition::cluster_sizes() const {
  std::vector<int> sizes(k, 0);
  for (int l : labels) ++sizes[l];
  return sizes;
}

std::vector<std::vector<int>> Partition::clusters() const {
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < n(); ++v) out[labels[v]].push_back(v);
  return out;
}

bool Partition::has_empty_cluster() const {
  const auto sizes = cluster_sizes();
  return std::find(sizes.begin(), sizes.end(), 0) != sizes.end();
}

}  // namespace skc
