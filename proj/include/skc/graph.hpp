#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace skc {

/// Immutable simple undirected graph over dense 0-based vertex ids.
///
/// Edges are stored once as (u, v) with u < v, sorted lexicographically;
/// adjacency lists are sorted ascending. No self-loops, no multi-edges.
/// Instances never mutate after construction, so concurrent reads are safe.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices from unordered endpoint pairs.
  /// Rejects self-loops, duplicate edges and out-of-range endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(edges_.size());
  }
  int degree(int u) const { return deg_[u]; }
  const std::vector<int>& degrees() const { return deg_; }
  int max_degree() const { return d_max_; }
  int min_degree() const { return d_min_; }

  /// vol(V) = sum of all degrees = 2|E|.
  std::int64_t total_volume() const { return vol_total_; }

  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  /// vol(S) = sum of degrees over s, degrees measured in this graph.
  /// s must contain valid, distinct vertex ids.
  std::int64_t volume(const std::vector<int>& s) const;

  int component_count() const;
  bool connected() const { return n_ > 0 && component_count() == 1; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> deg_;
  int d_max_ = 0;
  int d_min_ = 0;
  std::int64_t vol_total_ = 0;
};

/// Subgraph induced on a vertex subset. Vertices are relabeled 0..|s|-1
/// preserving the ascending order of their original ids;
/// vertex_map[new_id] = original id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;
};

/// Edges of the result are exactly the edges of g with both endpoints in s.
/// s must be a non-empty subset of V (duplicates are rejected).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

}  // namespace skc
