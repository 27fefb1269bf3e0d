#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// An ordered vertex sequence meant to be a simple path.
///
/// The type itself only knows vertex labels; whether the sequence is a path
/// of a particular graph is answered by is_path(). Positions exposed through
/// position() are 1-based, the rest of the API is 0-based.
class VertexPath {
 public:
  VertexPath() = default;
  explicit VertexPath(std::vector<Vertex> vertices);
  VertexPath(std::initializer_list<Vertex> vertices) : VertexPath(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int order() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  /// Set of vertices on the sequence.
  VertexMask mask() const { return mask_; }
  bool contains(Vertex v) const { return v >= 0 && v < kMaxOrder && (mask_ & bit(v)) != 0; }

  /// 1-based index of v, if present.
  std::optional<int> position(Vertex v) const;

  VertexPath reversed() const;
  /// The orientation that is lexicographically <= its reversal.
  VertexPath canonical() const;
  bool is_canonical() const;

  std::string to_string() const;

  friend bool operator==(const VertexPath& a, const VertexPath& b) { return a.vertices_ == b.vertices_; }
  friend auto operator<=>(const VertexPath& a, const VertexPath& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<Vertex> vertices_;
  VertexMask mask_ = 0;
};

/// True iff seq is nonempty, its vertices are distinct vertices of g, and
/// consecutive vertices are adjacent.
bool is_path(const Graph& g, std::span<const Vertex> seq);
inline bool is_path(const Graph& g, const VertexPath& p) { return is_path(g, p.vertices()); }

}  // namespace gallai
