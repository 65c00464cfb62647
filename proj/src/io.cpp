#include "skc/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "skc/errors.hpp"

namespace skc {

namespace {

constexpr long long kMaxVertexId = 100'000'000;

std::string loc(const std::string& path, int lineno) {
  return path + ":" + std::to_string(lineno) + ": ";
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Strict non-negative integer parse of a whole token.
long long parse_id(const std::string& token, const std::string& where) {
  if (token.empty()) throw DataError(where + "empty field");
  for (char c : token)
    if (c < '0' || c > '9') throw DataError(where + "expected a non-negative integer, got '" + token + "'");
  if (token.size() > 18) throw DataError(where + "number out of range: '" + token + "'");
  return std::stoll(token);
}

}  // namespace

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  const fs::path tmp =
      dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));

  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DataError("write to " + tmp.string() + " failed");
    }
  }

  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ec2;
    fs::remove(tmp, ec2);
    throw DataError("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");

  std::vector<std::pair<int, int>> edges;
  long long max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ss(line);
    std::string tu, tv, extra;
    ss >> tu >> tv;
    if (tv.empty()) throw DataError(loc(path, lineno) + "expected two vertex ids");
    if (ss >> extra) throw DataError(loc(path, lineno) + "trailing token '" + extra + "'");
    const long long u = parse_id(tu, loc(path, lineno));
    const long long v = parse_id(tv, loc(path, lineno));
    if (u > kMaxVertexId || v > kMaxVertexId)
      throw DataError(loc(path, lineno) + "vertex id exceeds " + std::to_string(kMaxVertexId));
    max_id = std::max({max_id, u, v});
    edges.emplace_back(int(u), int(v));
  }
  if (edges.empty()) throw DataError(path + ": no edges");

  const int n = static_cast<int>(max_id + 1);
  std::vector<char> seen(n, 0);
  for (const auto& [u, v] : edges) seen[u] = seen[v] = 1;
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      throw DataError(path + ": vertex ids are not dense: " + std::to_string(i) +
                      " never appears but the maximum id is " + std::to_string(max_id));

  try {
    return Graph(n, edges);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::string out;
  out.reserve(g.num_edges() * 12);
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  atomic_write_text(path, out);
}

Partition load_partition_csv(const std::string& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open");

  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty file");
  strip_cr(line);
  if (line != "vertex,cluster")
    throw DataError(loc(path, 1) + "expected header 'vertex,cluster', got '" + line + "'");

  std::vector<std::pair<long long, long long>> rows;
  long long max_vertex = -1;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw DataError(loc(path, lineno) + "expected 'vertex,cluster'");
    const long long v = parse_id(line.substr(0, comma), loc(path, lineno));
    const long long c = parse_id(line.substr(comma + 1), loc(path, lineno));
    if (v > kMaxVertexId) throw DataError(loc(path, lineno) + "vertex id too large");
    max_vertex = std::max(max_vertex, v);
    rows.emplace_back(v, c);
  }
  if (rows.empty()) throw DataError(path + ": no rows");

  const int n = expected_n >= 0 ? expected_n : static_cast<int>(max_vertex + 1);
  if (max_vertex >= n)
    throw DataError(path + ": vertex " + std::to_string(max_vertex) +
                    " out of range for n = " + std::to_string(n));

  std::vector<int> labels(n, -1);
  for (const auto& [v, c] : rows) {
    if (labels[v] != -1)
      throw DataError(path + ": vertex " + std::to_string(v) + " listed twice");
    labels[v] = static_cast<int>(c);
  }
  for (int v = 0; v < n; ++v)
    if (labels[v] == -1)
      throw DataError(path + ": vertex " + std::to_string(v) + " has no row");

  return Partition::from_labels(std::move(labels));
}

std::string partition_to_csv(const Partition& p) {
  std::string out = "vertex,cluster\n";
  for (int v = 0; v < p.n(); ++v) {
    out += std::to_string(v);
    out += ',';
    out += std::to_string(p.labels[v]);
    out += '\n';
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<double>& values) {
  std::string out = "index,eigenvalue\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_g17(values[i]);
    out += '\n';
  }
  return out;
}

std::string embedding_to_csv(const Eigen::MatrixXd& emb) {
  std::string out = "vertex";
  for (int c = 0; c < emb.cols(); ++c) out += ",x" + std::to_string(c + 1);
  out += '\n';
  for (int u = 0; u < emb.rows(); ++u) {
    out += std::to_string(u);
    for (int c = 0; c < emb.cols(); ++c) {
      out += ',';
      out += format_g17(emb(u, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace skc
