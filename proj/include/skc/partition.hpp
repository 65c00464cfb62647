#pragma once

#include <vector>

namespace skc {

/// Disjoint cover of V by k labeled clusters: labels[v] in [0, k).
/// Empty clusters are representable (the greedy clusterer emits them when it
/// exhausts the vertex set early); has_empty_cluster() flags them.
struct Partition {
  std::vector<int> labels;
  int k = 0;

  /// Infers k = 1 + max label. Rejects negative labels and empty input.
  static Partition from_labels(std::vector<int> labels);

  int n() const { return static_cast<int>(labels.size()); }
  void validate() const;  // every label in [0, k)

  std::vector<int> cluster_sizes() const;
  /// Members per label, each ascending.
  std::vector<std::vector<int>> clusters() const;
  bool has_empty_cluster() const;
};

}  // namespace skc
