#pragma once

#include <string>
#include <string_view>

#include "gallai/graph.hpp"

namespace gallai {

/// Largest order expressible with the single-byte graph6 size field.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline (LF or CRLF) are accepted. Long-form sizes (first byte 126) are
/// rejected with MalformedHeader.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: no header, no trailing newline.
std::string to_graph6(const Graph& g);

}  // namespace gallai
