#include "gallai/graph6.hpp"

#include <string>
#include <vector>

#include "gallai/error.hpp"

namespace gallai {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t body_bytes(int order) {
  std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  if (text.empty()) throw Error(ErrorKind::MalformedHeader, "empty graph6 line");
  const int size_byte = static_cast<unsigned char>(text.front());
  if (size_byte == kMaxByte) {
    throw Error(ErrorKind::MalformedHeader, "long-form graph6 sizes (order > 62) are not supported");
  }
  if (size_byte < kBias || size_byte > kMaxByte) {
    throw Error(ErrorKind::MalformedHeader, "size byte " + std::to_string(size_byte) + " outside 63..125");
  }
  const int order = size_byte - kBias;
  text.remove_prefix(1);

  const std::size_t expected = body_bytes(order);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) {
      throw Error(ErrorKind::InvalidByte,
                  "byte " + std::to_string(c) + " at body offset " + std::to_string(i) + " outside 63..126");
    }
  }
  if (text.size() < expected) {
    throw Error(ErrorKind::TruncatedBody, "expected " + std::to_string(expected) + " body bytes, got " +
                                              std::to_string(text.size()));
  }
  if (text.size() > expected) {
    throw Error(ErrorKind::TrailingBytes, "expected " + std::to_string(expected) + " body bytes, got " +
                                              std::to_string(text.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;  // bit index into the body, most significant bit of each byte first
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int six = static_cast<unsigned char>(text[k / 6]) - kBias;
      if ((six >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero, otherwise the line has no canonical re-encoding
  for (; k < expected * 6; ++k) {
    const int six = static_cast<unsigned char>(text[k / 6]) - kBias;
    if ((six >> (5 - k % 6)) & 1) throw Error(ErrorKind::InvalidByte, "nonzero padding bit in last body byte");
  }
  return Graph(order, edges);
}

std::string to_graph6(const Graph& g) {
  const int order = g.order();
  if (order > kGraph6MaxOrder) {
    throw Error(ErrorKind::OrderTooLarge, "graph6 short form holds at most 62 vertices, got " + std::to_string(order));
  }
  std::string out;
  out.reserve(1 + body_bytes(order));
  out.push_back(static_cast<char>(order + kBias));

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace gallai
