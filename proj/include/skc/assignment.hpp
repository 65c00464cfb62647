#pragma once

#include <cstdint>
#include <vector>

namespace skc {

/// Minimum-cost perfect matching of rows to columns, rows <= cols required.
/// Returns the total cost; row_to_col[i] receives the matched column of row i.
/// Costs may be negative (the partition-distance caller negates overlaps to
/// turn max-weight into min-cost).
std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost,
                                 std::vector<int>& row_to_col);

}  // namespace skc
