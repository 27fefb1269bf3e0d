#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gallai {

using Vertex = int;
using VertexMask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex sets are 64-bit masks, so graphs are capped at 64 vertices.
inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Vertices of a mask in increasing order.
std::vector<Vertex> mask_vertices(VertexMask mask);

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is stored as one bitmask per vertex; the constructor rejects
/// self-loops and out-of-range endpoints and symmetrizes duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  bool empty() const { return adjacency_.empty(); }

  VertexMask neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return (neighbors(u) & bit(v)) != 0; }
  int degree(Vertex v) const { return std::popcount(neighbors(v)); }
  VertexMask all_vertices() const;

  std::size_t edge_count() const;
  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> adjacency_;
};

/// True iff every vertex is reachable from vertex 0. Graphs of order <= 1 are connected.
bool is_connected(const Graph& g);

/// Vertices reachable from `start` while staying inside `allowed` (start is always included).
VertexMask reachable_within(const Graph& g, Vertex start, VertexMask allowed);

}  // namespace gallai
