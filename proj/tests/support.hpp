#pragma once

// Independent oracles and fixtures shared by the test suites. Nothing here
// calls into the code path it is used to check.

#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/intersect.hpp"
#include "gallai/path.hpp"
#include "gallai/prng.hpp"

namespace gallai::testing {

/// graph6 encoder written from the format description: build the bit string
/// of the upper triangle column by column, pad with zeros to a multiple of
/// six, add 63 to each group.
std::string reference_graph6(const Graph& g);

Graph petersen();

/// Connected graphs of orders 1..max_order, one per isomorphism class.
const std::vector<Graph>& exhaustive_corpus(int max_order = 7);

/// Random labeled graph with each edge present with probability num/den
/// (may be disconnected).
Graph random_graph(Xoshiro256& rng, int order, std::uint64_t num, std::uint64_t den);

/// Triple loop over every index triple on p2, returning the
/// lexicographically smallest interleaving.
std::optional<Interleaving> nested_loop_interleave(const VertexPath& p1, const VertexPath& p2, const VertexPath& p3);

/// Canonical path set by brute force over vertex subsets and orderings, a
/// second oracle independent of both the engine and the permutation oracle.
std::vector<std::vector<Vertex>> subset_longest_paths(const Graph& g);

}  // namespace gallai::testing
