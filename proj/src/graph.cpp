#include "gallai/graph.hpp"

#include <string>

#include "gallai/error.hpp"

namespace gallai {

std::vector<Vertex> mask_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(ErrorKind::OrderTooLarge, "graph order " + std::to_string(order) + " outside [0, 64]");
  }
  adjacency_.assign(static_cast<std::size_t>(order), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorKind::InvalidEdge,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    if (u == v) {
      throw Error(ErrorKind::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    }
    adjacency_[static_cast<std::size_t>(u)] |= bit(v);
    adjacency_[static_cast<std::size_t>(v)] |= bit(u);
  }
}

VertexMask Graph::all_vertices() const {
  return order() == kMaxOrder ? ~VertexMask{0} : bit(order()) - 1;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    // only neighbors above u
    VertexMask above = neighbors(u) & ~((bit(u) << 1) - 1);
    for (Vertex v : mask_vertices(above)) out.emplace_back(u, v);
  }
  return out;
}

VertexMask reachable_within(const Graph& g, Vertex start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  allowed |= seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable_within(g, 0, g.all_vertices()) == g.all_vertices();
}

}  // namespace gallai
