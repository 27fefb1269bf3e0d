#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

enum class Family { Path, Cycle, Star, Spider, Complete, RandomTree, RandomConnected };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Exact rational probability, so edge sampling never touches floating point.
struct Probability {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 2;
  friend bool operator==(const Probability&, const Probability&) = default;
};

/// Parses "3/10" or a decimal such as "0.25" (at most 9 fractional digits).
std::optional<Probability> parse_probability(std::string_view text);

struct GeneratorSpec {
  Family family = Family::Path;
  int order = 0;       // vertex count for every family except spider
  int legs = 0;        // spider only
  int leg_length = 0;  // spider only
  Probability edge_probability{};  // random_connected only
  std::uint64_t seed = 0;          // random families only
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Sampling attempts random_connected makes before giving up.
inline constexpr int kConnectivityRetries = 10'000;

/// Builds the graph described by `spec`.
///
///  path      P_order, edges i-(i+1)
///  cycle     C_order, order >= 3
///  star      vertex 0 joined to 1..order-1, order >= 2
///  spider    vertex 0 joined to the first vertex of each of `legs` chains of
///            `leg_length` vertices; legs >= 3, leg_length >= 1
///  complete  K_order
///  random_tree       uniform labeled tree via a random Pruefer sequence
///  random_connected  G(order, p) rejection-sampled until connected
Graph generate(const GeneratorSpec& spec);

/// One representative of every isomorphism class of connected graphs of the
/// given order, found by naive vertex extension plus brute-force canonical
/// labeling. Only intended for order <= 7.
std::vector<Graph> enumerate_connected_graphs(int order);

inline constexpr int kMaxEnumeratedOrder = 7;

}  // namespace gallai
