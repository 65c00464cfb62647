#include "skc/assignment.hpp"

#include <limits>
#include <string>

#include "skc/errors.hpp"

namespace skc {

// Hungarian algorithm in the potentials formulation: O(rows^2 * cols).
// Indices are 1-based internally; column 0 is the virtual "unmatched" slot.
std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost,
                                 std::vector<int>& row_to_col) {
  const int r = static_cast<int>(cost.size());
  if (r == 0) throw UsageError("empty cost matrix");
  const int c = static_cast<int>(cost[0].size());
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != c) throw UsageError("ragged cost matrix");
  if (r > c)
    throw UsageError("cost matrix has " + std::to_string(r) + " rows > " +
                     std::to_string(c) + " cols");

  constexpr std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(r + 1, 0), v(c + 1, 0);
  std::vector<int> match(c + 1, 0);  // match[j] = row occupying column j
  std::vector<int> way(c + 1, 0);

  for (int i = 1; i <= r; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(c + 1, INF);
    std::vector<char> used(c + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      std::int64_t delta = INF;
      int j1 = -1;
      for (int j = 1; j <= c; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= c; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  row_to_col.assign(r, -1);
  std::int64_t total = 0;
  for (int j = 1; j <= c; ++j) {
    if (match[j] != 0) {
      row_to_col[match[j] - 1] = j - 1;
      total += cost[match[j] - 1][j - 1];
    }
  }
  return total;
}

}  // namespace skc
