#pragma once

#include <vector>

namespace ksadist {

/// Maximum bipartite matching by augmenting paths on an explicit
/// left-by-right incidence matrix. Returns match_for_left (right index or
/// -1), deterministic for a fixed matrix.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<char>>& edges);

/// True iff a perfect matching pairs every left node to a distinct right
/// node and covers both sides (requires a square incidence matrix).
bool has_perfect_matching(const std::vector<std::vector<char>>& edges);

} // namespace ksadist
