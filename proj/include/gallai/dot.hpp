#pragma once

#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/path.hpp"

namespace gallai {

/// Graphviz source for g. Edges on the i-th highlighted path get the i-th
/// palette color; an edge shared by several paths gets a ':'-separated color
/// list. Throws InvalidPath if a highlight is not a path of g.
std::string to_dot(const Graph& g, const std::vector<VertexPath>& highlighted_paths = {});

}  // namespace gallai
