#include "gallai/generate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

#include "gallai/error.hpp"
#include "gallai/prng.hpp"

namespace gallai {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Spider, "spider"},
    {Family::Complete, "complete"},
    {Family::RandomTree, "random_tree"},
    {Family::RandomConnected, "random_connected"},
}};

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidParams, message);
}

Graph random_tree(int order, std::uint64_t seed) {
  if (order <= 2) {
    return order == 2 ? Graph(2, {{0, 1}}) : Graph(order, std::span<const Edge>{});
  }
  Xoshiro256 rng(seed);
  const auto n = static_cast<std::size_t>(order);
  std::vector<Vertex> pruefer(n - 2);
  for (auto& v : pruefer) v = static_cast<Vertex>(rng.uniform_below(n));

  std::vector<int> remaining_degree(n, 1);
  for (Vertex v : pruefer) ++remaining_degree[static_cast<std::size_t>(v)];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : pruefer) {
    // smallest current leaf
    Vertex leaf = 0;
    while (remaining_degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --remaining_degree[static_cast<std::size_t>(leaf)];
    --remaining_degree[static_cast<std::size_t>(v)];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < order; ++v) {
    if (remaining_degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  edges.emplace_back(last.at(0), last.at(1));
  return Graph(order, edges);
}

Graph random_connected(int order, Probability p, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex j = 1; j < order; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng.bernoulli(p.numerator, p.denominator)) edges.emplace_back(i, j);
      }
    }
    Graph g(order, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::ConnectivityRetriesExhausted,
              "no connected sample after " + std::to_string(kConnectivityRetries) + " attempts");
}

// Bit k of the code is the k-th pair in graph6 order (0-1, 0-2, 1-2, 0-3, ...)
// under the relabeling new_label -> perm[new_label].
std::uint64_t pair_code(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t code = 0;
  int k = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
        code |= std::uint64_t{1} << k;
      }
    }
  }
  return code;
}

Graph from_pair_code(int order, std::uint64_t code) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(order, edges);
}

void permute_classes(const Graph& g, std::vector<Vertex>& perm,
                     const std::vector<std::pair<std::size_t, std::size_t>>& classes, std::size_t depth,
                     std::uint64_t& best) {
  if (depth == classes.size()) {
    best = std::min(best, pair_code(g, perm));
    return;
  }
  const auto [first, last] = classes[depth];
  auto begin = perm.begin() + static_cast<std::ptrdiff_t>(first);
  auto end = perm.begin() + static_cast<std::ptrdiff_t>(last);
  std::sort(begin, end);
  do {
    permute_classes(g, perm, classes, depth + 1, best);
  } while (std::next_permutation(begin, end));
}

// Minimum pair code over all labelings that list vertices by non-increasing
// degree. The degree partition is invariant, so isomorphic graphs agree.
std::uint64_t canonical_code(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < perm.size();) {
    std::size_t j = i;
    while (j < perm.size() && g.degree(perm[j]) == g.degree(perm[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  permute_classes(g, perm, classes, 0, best);
  return best;
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::optional<Probability> parse_probability(std::string_view text) {
  auto parse_u64 = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t value = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
  };

  Probability p;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_u64(text.substr(0, slash));
    auto den = parse_u64(text.substr(slash + 1));
    if (!num || !den) return std::nullopt;
    p = {*num, *den};
  } else {
    auto dot = text.find('.');
    auto whole = parse_u64(text.substr(0, dot));
    if (!whole) return std::nullopt;
    p = {*whole, 1};
    if (dot != std::string_view::npos) {
      auto digits = text.substr(dot + 1);
      if (digits.size() > 9) return std::nullopt;
      auto frac = digits.empty() ? std::optional<std::uint64_t>{0} : parse_u64(digits);
      if (!frac) return std::nullopt;
      std::uint64_t scale = 1;
      for (std::size_t i = 0; i < digits.size(); ++i) scale *= 10;
      p = {*whole * scale + *frac, scale};
    }
  }
  if (p.denominator == 0 || p.numerator > p.denominator) return std::nullopt;
  const std::uint64_t g = std::gcd(p.numerator, p.denominator);
  if (g > 1) p = {p.numerator / g, p.denominator / g};
  return p;
}

Graph generate(const GeneratorSpec& spec) {
  const int n = spec.order;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      require(n >= 1 && n <= kMaxOrder, "path order must be in [1, 64]");
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph(n, edges);
    case Family::Cycle:
      require(n >= 3 && n <= kMaxOrder, "cycle order must be in [3, 64]");
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph(n, edges);
    case Family::Star:
      require(n >= 2 && n <= kMaxOrder, "star order must be in [2, 64]");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph(n, edges);
    case Family::Spider: {
      require(spec.legs >= 3, "spider needs at least 3 legs");
      require(spec.leg_length >= 1, "spider leg length must be at least 1");
      const long total = 1L + static_cast<long>(spec.legs) * spec.leg_length;
      require(total <= kMaxOrder, "spider has more than 64 vertices");
      for (int leg = 0; leg < spec.legs; ++leg) {
        const Vertex first = 1 + leg * spec.leg_length;
        edges.emplace_back(0, first);
        for (int step = 1; step < spec.leg_length; ++step) edges.emplace_back(first + step - 1, first + step);
      }
      return Graph(static_cast<int>(total), edges);
    }
    case Family::Complete:
      require(n >= 1 && n <= kMaxOrder, "complete order must be in [1, 64]");
      for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
      }
      return Graph(n, edges);
    case Family::RandomTree:
      require(n >= 1 && n <= kMaxOrder, "random_tree order must be in [1, 64]");
      return random_tree(n, spec.seed);
    case Family::RandomConnected:
      require(n >= 1 && n <= kMaxOrder, "random_connected order must be in [1, 64]");
      require(spec.edge_probability.denominator > 0 &&
                  spec.edge_probability.numerator <= spec.edge_probability.denominator,
              "edge probability must lie in [0, 1]");
      return random_connected(n, spec.edge_probability, spec.seed);
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

std::vector<Graph> enumerate_connected_graphs(int order) {
  if (order < 1 || order > kMaxEnumeratedOrder) {
    throw Error(ErrorKind::InvalidParams, "naive enumeration supports orders 1..7");
  }
  std::set<std::uint64_t> level{0};  // the single-vertex graph
  for (int n = 2; n <= order; ++n) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = from_pair_code(n - 1, code);
      const auto base_edges = base.edges();
      for (VertexMask attach = 0; attach < bit(n - 1); ++attach) {
        std::vector<Edge> edges = base_edges;
        for (Vertex v : mask_vertices(attach)) edges.emplace_back(v, n - 1);
        next.insert(canonical_code(Graph(n, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = from_pair_code(order, code);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gallai
