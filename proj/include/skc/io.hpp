#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "skc/graph.hpp"
#include "skc/partition.hpp"

namespace skc {

/// 17 significant digits, enough for doubles to round-trip exactly.
std::string format_g17(double x);

/// Writes to a temp file in the target's directory, then renames over the
/// target, so readers never observe a half-written file.
void atomic_write_text(const std::string& path, const std::string& content);

/// Whitespace-separated "u v" pairs, one edge per line, '#' lines are
/// comments. n is inferred as 1 + max id and every id in [0, n) must appear:
/// gaps almost always mean the file was written with a different numbering,
/// and compacting silently would desynchronize partition files.
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

/// CSV "vertex,cluster", one row per vertex, any row order, 0-based labels.
/// expected_n >= 0 enforces a vertex count (pass the graph's n).
Partition load_partition_csv(const std::string& path, int expected_n = -1);
std::string partition_to_csv(const Partition& p);

/// CSV "index,eigenvalue" with 1-based index.
std::string spectrum_to_csv(const std::vector<double>& values);

/// CSV "vertex,x1,...,xk".
std::string embedding_to_csv(const Eigen::MatrixXd& emb);

}  // namespace skc
