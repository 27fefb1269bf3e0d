#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/longest.hpp"
#include "gallai/path.hpp"

namespace gallai {

/// Common vertices of two paths together with their 1-based positions.
struct PairIntersection {
  std::vector<Vertex> common;    // sorted
  std::vector<int> positions_a;  // positions_a[i] is the index of common[i] on a
  std::vector<int> positions_b;
};

PairIntersection common_vertices(const VertexPath& a, const VertexPath& b);
/// As above, but first checks that both sequences are paths of g.
PairIntersection common_vertices(const Graph& g, const VertexPath& a, const VertexPath& b);

/// Evidence for a failed check. Which fields are filled depends on the check.
struct Witness {
  std::vector<VertexPath> paths{};
  std::vector<Vertex> vertices{};
  std::vector<int> indices{};
  std::string detail{};
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckVerdict {
  std::string property{};
  bool holds = true;
  bool vacuous = false;  // the premise did not apply to this graph
  bool capped = false;   // only part of the pairs/triples (or paths) were examined
  std::optional<Witness> witness{};  // present iff holds is false
};

enum class ParityConvention { VertexCount, EdgeCount };

/// Default number of triples triple_check examines.
inline constexpr std::size_t kDefaultTripleCap = 50'000;

// Every check below throws DisconnectedGraph for disconnected g. The report
// overloads reuse an existing enumeration; a truncated report makes the
// pairwise checks partial (capped = true).

/// Any two longest paths share a vertex.
CheckVerdict pairwise_check(const Graph& g, const LongestPathReport& report);
CheckVerdict pairwise_check(const Graph& g);

/// If the longest-path measure is even, the longest path is unique or any two
/// longest paths share at least two vertices. The measure is the vertex count
/// or the edge count depending on `convention`; an odd measure is vacuous.
CheckVerdict lemma2_check(const Graph& g, const LongestPathReport& report, ParityConvention convention);
CheckVerdict lemma2_check(const Graph& g, ParityConvention convention);

/// Any two longest paths can be oriented so that every shared vertex has the
/// same index on both.
CheckVerdict index_alignment_check(const Graph& g, const LongestPathReport& report);
CheckVerdict index_alignment_check(const Graph& g);

/// True iff some orientation of a and b puts every common vertex at equal indices.
bool aligned_somehow(const VertexPath& a, const VertexPath& b);

/// 1-based indices along the middle path: p1 meets it at t_p and t_q, p3 meets
/// it at r_s, and t_p < r_s < t_q.
struct Interleaving {
  int t_p = 0;
  int r_s = 0;
  int t_q = 0;
  friend bool operator==(const Interleaving&, const Interleaving&) = default;
};

/// Lexicographically first (t_p, r_s, t_q) over indices on p2, where p2[r_s]
/// must not lie on all three paths.
std::optional<Interleaving> interleave_scan(const VertexPath& p1, const VertexPath& p2, const VertexPath& p3);
std::optional<Interleaving> interleave_scan(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                            const VertexPath& p3);

/// Vertices on every longest path. Throws TruncatedReport for a partial report.
std::vector<Vertex> gallai_set(const LongestPathReport& report);

/// Any three longest paths share a vertex. Holds immediately when the Gallai
/// set is nonempty; otherwise scans at most `triple_cap` triples.
CheckVerdict triple_check(const Graph& g, const LongestPathReport& report, std::size_t triple_cap = kDefaultTripleCap);
CheckVerdict triple_check(const Graph& g, std::size_t triple_cap = kDefaultTripleCap);

/// Holds iff the Gallai set is nonempty; the witness of a failure carries no
/// vertices. Throws TruncatedReport for a partial report.
CheckVerdict gallai_check(const Graph& g, const LongestPathReport& report);

/// Re-evaluates the violated predicate on the witness alone. True iff the
/// violation is reproduced. Understands the verdicts produced above.
bool replay_witness(const Graph& g, const CheckVerdict& verdict);

}  // namespace gallai
