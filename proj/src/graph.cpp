#include "skc/graph.hpp"

#include <algorithm>
#include <string>

#include "skc/errors.hpp"

namespace skc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw UsageError("vertex count must be non-negative");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DataError("edge endpoint out of range: " + std::to_string(u) +
                      " " + std::to_string(v));
    if (u == v) throw DataError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
  if (dup != edge_list.end())
    throw DataError("duplicate edge " + std::to_string(dup->first) + " " +
                    std::to_string(dup->second));
  edges_ = std::move(edge_list);

  deg_.assign(n_, 0);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    ++deg_[u];
    ++deg_[v];
  }
  for (int u = 0; u < n_; ++u) adj_[u].reserve(deg_[u]);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  for (int d : deg_) vol_total_ += d;
  d_max_ = deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
  d_min_ = deg_.empty() ? 0 : *std::min_element(deg_.begin(), deg_.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::int64_t Graph::volume(const std::vector<int>& s) const {
  std::int64_t vol = 0;
  for (int u : s) {
    if (u < 0 || u >= n_)
      throw UsageError("vertex id out of range: " + std::to_string(u));
    vol += deg_[u];
  }
  return vol;
}

int Graph::component_count() const {
  std::vector<int> comp(n_, -1);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u]) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw UsageError("induced subgraph of an empty vertex set");
  std::vector<int> vertices = s;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw UsageError("vertex subset contains duplicates");
  if (vertices.front() < 0 || vertices.back() >= g.num_vertices())
    throw UsageError("vertex subset out of range");

  std::vector<int> new_id(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    new_id[vertices[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (int u : vertices) {
    for (int w : g.neighbors(u)) {
      if (w > u && new_id[w] != -1) edges.emplace_back(new_id[u], new_id[w]);
    }
  }
  return {Graph(static_cast<int>(vertices.size()), std::move(edges)),
          std::move(vertices)};
}

}  // namespace skc
