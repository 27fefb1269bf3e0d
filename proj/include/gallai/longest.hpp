#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/path.hpp"

namespace gallai {

/// All longest paths of a graph, one canonical orientation each.
struct LongestPathReport {
  int order_L = 0;                  // vertex count of a longest path
  std::vector<VertexPath> paths;    // canonical, sorted lexicographically
  bool truncated = false;           // more than `cap` longest paths exist
  std::uint64_t explored_nodes = 0;

  friend bool operator==(const LongestPathReport&, const LongestPathReport&) = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr int kOracleMaxOrder = 10;
inline constexpr std::size_t kDefaultPathCap = 100'000;

struct SearchOptions {
  /// Cut branches that cannot reach the best order found so far.
  bool prune = true;
  /// Abort with NodeBudgetExceeded after this many search nodes; 0 disables.
  std::uint64_t node_budget = 0;
};

/// Maximum number of vertices on a simple path of g.
int longest_path_order(const Graph& g, SearchOptions options = {});

/// Depth-first enumeration of every longest path.
///
/// Paths grow from each start vertex in increasing order, extending the tail
/// through neighbors in increasing order, so canonical paths are met in
/// lexicographic order and the first `cap` of them are kept. A branch is cut
/// when its order plus the number of unvisited vertices reachable from the
/// tail falls below the best order so far, or when no vertex larger than the
/// start remains reachable (the path could never be canonical).
/// order_L is exact even when the list is truncated.
LongestPathReport enumerate_longest_paths(const Graph& g, std::size_t cap, SearchOptions options = {});

/// Reference implementation for cross-checking enumerate_longest_paths:
/// walks every vertex permutation and keeps its longest valid prefix.
/// Limited to graphs of order <= 10.
LongestPathReport brute_force_longest(const Graph& g);

}  // namespace gallai
