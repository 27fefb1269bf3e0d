#include "gallai/longest.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "gallai/error.hpp"

namespace gallai {
namespace {

class PathSearch {
 public:
  // collect = false: only the order is wanted, so branches that merely tie
  // the best order are cut as well.
  PathSearch(const Graph& g, std::size_t cap, SearchOptions options, bool collect)
      : g_(g), cap_(cap), options_(options), collect_(collect) {}

  void run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      start_ = s;
      path_[0] = s;
      extend(s, bit(s), 1);
    }
  }

  LongestPathReport take_report() {
    std::sort(report_.paths.begin(), report_.paths.end());
    return std::move(report_);
  }

  int best() const { return report_.order_L; }

 private:
  void extend(Vertex head, VertexMask visited, int depth) {
    if (options_.node_budget != 0 && report_.explored_nodes >= options_.node_budget) {
      throw Error(ErrorKind::NodeBudgetExceeded,
                  "longest-path search exceeded " + std::to_string(options_.node_budget) + " nodes");
    }
    ++report_.explored_nodes;
    record(head, depth);

    const VertexMask unvisited = g_.all_vertices() & ~visited;
    if (options_.prune) {
      const VertexMask reach = reachable_within(g_, head, unvisited);
      const int bound = depth + std::popcount(reach) - 1;
      if (collect_ ? bound < report_.order_L : bound <= report_.order_L) return;
      // every extension ends inside reach; a canonical one must end above the start
      if ((reach & ~((bit(start_) << 1) - 1)) == 0) return;
    }
    for (VertexMask next = g_.neighbors(head) & unvisited; next != 0; next &= next - 1) {
      const Vertex v = std::countr_zero(next);
      path_[static_cast<std::size_t>(depth)] = v;
      extend(v, visited | bit(v), depth + 1);
    }
  }

  void record(Vertex head, int depth) {
    if (depth < report_.order_L) return;
    if (depth > report_.order_L) {
      report_.order_L = depth;
      report_.paths.clear();
      report_.truncated = false;
    }
    if (!collect_) return;
    const bool canonical = depth == 1 || start_ < head;
    if (!canonical) return;
    if (report_.paths.size() < cap_) {
      report_.paths.emplace_back(
          std::vector<Vertex>(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(depth)));
    } else {
      report_.truncated = true;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  SearchOptions options_;
  bool collect_;
  Vertex start_ = 0;
  std::array<Vertex, kMaxOrder> path_{};
  LongestPathReport report_;
};

}  // namespace

int longest_path_order(const Graph& g, SearchOptions options) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  PathSearch search(g, 0, options, false);
  search.run();
  return search.best();
}

LongestPathReport enumerate_longest_paths(const Graph& g, std::size_t cap, SearchOptions options) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (cap == 0) throw Error(ErrorKind::InvalidParams, "path cap must be at least 1");
  PathSearch search(g, cap, options, true);
  search.run();
  return search.take_report();
}

LongestPathReport brute_force_longest(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (g.order() > kOracleMaxOrder) {
    throw Error(ErrorKind::OrderTooLargeForOracle,
                "permutation oracle limited to order " + std::to_string(kOracleMaxOrder));
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  LongestPathReport report;
  std::set<std::vector<Vertex>> found;
  do {
    ++report.explored_nodes;
    std::size_t valid = 1;
    while (valid < n && g.adjacent(perm[valid - 1], perm[valid])) ++valid;

    const int order = static_cast<int>(valid);
    if (order > report.order_L) {
      report.order_L = order;
      found.clear();
    }
    if (order == report.order_L) {
      std::vector<Vertex> prefix(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(valid));
      if (prefix.back() < prefix.front()) std::reverse(prefix.begin(), prefix.end());
      found.insert(std::move(prefix));
    }
    // Every permutation sharing perm[0..valid] breaks at the same place;
    // sorting the tail descending makes next_permutation skip them.
    if (valid < n) std::sort(perm.begin() + static_cast<std::ptrdiff_t>(valid) + 1, perm.end(), std::greater<>());
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& seq : found) report.paths.emplace_back(seq);
  return report;
}

}  // namespace gallai
