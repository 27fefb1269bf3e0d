#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gallai/generate.hpp"

namespace gallai::testing {

std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  }
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + g.order()));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = value * 2 + (bits[k + b] - '0');
    out += static_cast<char>(63 + value);
  }
  return out;
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

const std::vector<Graph>& exhaustive_corpus(int max_order) {
  static std::map<int, std::vector<Graph>> cache;
  auto [it, inserted] = cache.try_emplace(max_order);
  if (inserted) {
    for (int n = 1; n <= max_order; ++n) {
      auto level = enumerate_connected_graphs(n);
      it->second.insert(it->second.end(), level.begin(), level.end());
    }
  }
  return it->second;
}

Graph random_graph(Xoshiro256& rng, int order, std::uint64_t num, std::uint64_t den) {
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      if (rng.bernoulli(num, den)) edges.emplace_back(i, j);
    }
  }
  return Graph(order, edges);
}

std::optional<Interleaving> nested_loop_interleave(const VertexPath& p1, const VertexPath& p2, const VertexPath& p3) {
  const int n = p2.order();
  for (int a = 1; a <= n; ++a) {
    for (int s = 1; s <= n; ++s) {
      for (int b = 1; b <= n; ++b) {
        const Vertex va = p2[static_cast<std::size_t>(a - 1)];
        const Vertex vs = p2[static_cast<std::size_t>(s - 1)];
        const Vertex vb = p2[static_cast<std::size_t>(b - 1)];
        const bool ok = p1.contains(va) && p1.contains(vb) && p3.contains(vs) && !p1.contains(vs) && a < s && s < b;
        if (ok) return Interleaving{a, s, b};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> subset_longest_paths(const Graph& g) {
  // longest first: try every vertex subset from largest to smallest and
  // every ordering of it
  const int n = g.order();
  for (int size = n; size >= 1; --size) {
    std::set<std::vector<Vertex>> found;
    for (VertexMask subset = 0; subset < bit(n); ++subset) {
      if (std::popcount(subset) != size) continue;
      auto seq = mask_vertices(subset);
      do {
        bool ok = true;
        for (std::size_t i = 1; i < seq.size() && ok; ++i) ok = g.adjacent(seq[i - 1], seq[i]);
        if (ok && seq.front() <= seq.back()) found.insert(seq);
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
    if (!found.empty()) return {found.begin(), found.end()};
  }
  return {};
}

}  // namespace gallai::testing
