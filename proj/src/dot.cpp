#include "gallai/dot.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string_view>

#include "gallai/error.hpp"

namespace gallai {
namespace {

constexpr std::array<std::string_view, 8> kPalette{"red",    "blue",  "forestgreen", "darkorange",
                                                   "purple", "brown", "deeppink",    "cyan4"};

}  // namespace

std::string to_dot(const Graph& g, const std::vector<VertexPath>& highlighted_paths) {
  std::map<Edge, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < highlighted_paths.size(); ++i) {
    const auto& p = highlighted_paths[i];
    if (!is_path(g, p)) throw Error(ErrorKind::InvalidPath, "highlight " + p.to_string() + " is not a path");
    for (int k = 0; k + 1 < p.order(); ++k) {
      const Vertex a = p[static_cast<std::size_t>(k)];
      const Vertex b = p[static_cast<std::size_t>(k) + 1];
      owners[{std::min(a, b), std::max(a, b)}].push_back(i);
    }
  }

  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < highlighted_paths.size(); ++i) {
    out << "  // path " << i << " " << kPalette[i % kPalette.size()] << ": " << highlighted_paths[i].to_string() << "\n";
  }
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (auto it = owners.find(e); it != owners.end()) {
      out << " [color=\"";
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        if (k > 0) out << ":";
        out << kPalette[it->second[k] % kPalette.size()];
      }
      out << "\", penwidth=3]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gallai
