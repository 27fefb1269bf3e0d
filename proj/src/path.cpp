#include "gallai/path.hpp"

#include <algorithm>

#include "gallai/error.hpp"

namespace gallai {

VertexPath::VertexPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  for (Vertex v : vertices_) {
    if (v < 0 || v >= kMaxOrder) throw Error(ErrorKind::InvalidPath, "vertex label " + std::to_string(v) + " out of range");
    mask_ |= bit(v);
  }
}

std::optional<int> VertexPath::position(Vertex v) const {
  if (!contains(v)) return std::nullopt;
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  return static_cast<int>(it - vertices_.begin()) + 1;
}

VertexPath VertexPath::reversed() const {
  return VertexPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

bool VertexPath::is_canonical() const {
  return std::lexicographical_compare(vertices_.rbegin(), vertices_.rend(), vertices_.begin(), vertices_.end()) == false;
}

VertexPath VertexPath::canonical() const { return is_canonical() ? *this : reversed(); }

std::string VertexPath::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(vertices_[i]);
  }
  return out + ">";
}

bool is_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  VertexMask seen = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (v < 0 || v >= g.order() || (seen & bit(v)) != 0) return false;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
    seen |= bit(v);
  }
  return true;
}

}  // namespace gallai
