#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/intersect.hpp"
#include "gallai/longest.hpp"
#include "gallai/path.hpp"

namespace gallai {

/// Why an assembled walk is not a path.
struct Collision {
  enum class Kind { RepeatedVertex, MissingEdge };
  Kind kind = Kind::RepeatedVertex;
  Vertex vertex = -1;  // the repeated vertex, or the first endpoint of the missing edge
  Vertex other = -1;   // second endpoint of the missing edge
  std::string first_segment;
  std::string second_segment;
  friend bool operator==(const Collision&, const Collision&) = default;
};

/// A named piece of the walk: walk[begin, end).
struct WalkSegment {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const WalkSegment&, const WalkSegment&) = default;
};

/// The outcome of one rerouting construction.
///
/// claimed_order is the vertex count the construction's segment arithmetic
/// predicts; closed_form_order, when present, is the construction's closed-form
/// order estimate, kept separately because the two can differ.
struct SurgeryCertificate {
  std::string construction;
  std::vector<Vertex> walk;
  std::vector<WalkSegment> segments;
  int longest_order = 0;  // L the construction tries to beat
  int claimed_order = 0;
  int actual_order = 0;
  bool valid_path = false;
  bool beats_L = false;
  std::optional<Collision> collision;  // present iff !valid_path
  std::optional<int> closed_form_order;
  std::string note;
};

/// Joins two vertex-disjoint paths of equal order L through `connector`,
/// which runs from a vertex of pi to a vertex of pj and otherwise avoids both.
///
/// Each path is turned so the connector endpoint sits on its larger side
/// (index k >= ceil((L+1)/2)). The weaker bound k >= ceil(L/2) would allow
/// k + k' = L for even L and a walk of order L.
/// Walk: pi[1..k], connector interior, pj[k'..1]; claimed order k + b + k'.
SurgeryCertificate lemma1_surgery(const Graph& g, const VertexPath& pi, const VertexPath& pj, const VertexPath& connector);

/// Two paths of even order L = 2m meeting only at pi[k] = pj[k_prime]
/// (1-based). Orientations are normalized so that k, k_prime >= m, reversing
/// a path only when its index is below m.
///  case 1 (k > m or k_prime > m): prefix of the path with index > m up to the
///    shared vertex, then the other path back to its start;
///    claimed order k + k_prime - 1.
///  case 2 (k = k_prime = m): pi from its end back to the shared vertex, then
///    pj onward to its end; claimed order (L - k + 1) + (L - k_prime).
/// closed_form_order is 2m + 1. The note records when an index equal to m
/// would have become m + 1 under full reorientation.
SurgeryCertificate lemma2_surgery(const Graph& g, const VertexPath& pi, const VertexPath& pj, int k, int k_prime);

/// Reasons the interleaving construction may not run, or nullopt when all
/// clauses hold. Indices are 1-based positions on p2. Besides the order
/// t_p < r_s < t_q and the membership of the three junctions, p2 may meet
/// p1 or p3 nowhere strictly between t_p and t_q except at r_s, p2[t_p] and
/// p2[r_s] may not lie on all three paths, and the junction copies must sit at
/// the same index on p1 and p3 as on p2 (the construction's arithmetic
/// assumes aligned indices).
std::optional<std::string> lemma3_premise_violation(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                                    const VertexPath& p3, int t_p, int r_s, int t_q);

/// Walk: p3[1..r_s], p2[r_s-1..t_p], p1[t_p+1..t_q], p1[t_q+1..L].
/// Claimed order L + 2(r_s - t_p). Throws PremiseViolated naming the clause.
SurgeryCertificate lemma3_surgery(const Graph& g, const VertexPath& p1, const VertexPath& p2, const VertexPath& p3,
                                  int t_p, int r_s, int t_q);

/// For three paths without a common vertex where, along p2, every meeting
/// with p1 (last at t_a) precedes every meeting with p3 (first at r_1).
/// Walk: p1[L..t_a], p2[t_a+1..r_1], p3[r_1+1..L], claimed order
/// 2L - 2t_a + 1. closed_form_order is 3L - 2(x + y) with x = t_a and
/// y = L - r_1; the two agree only when 2 r_1 = L + 1.
SurgeryCertificate case1_final_surgery(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                       const VertexPath& p3, int t_a, int r_1);

/// Recomputes validity, order, beats_L and collision presence from the walk.
bool validate_certificate(const Graph& g, const SurgeryCertificate& cert, int L);

/// Searches triples of longest paths (every choice of middle path, outer
/// roles and outer orientations) for configurations meeting the full
/// interleaving premise, and runs the rerouting on each. Holds iff no such
/// configuration exists. The witness records p1, p2, p3, the indices
/// (t_p, r_s, t_q) and the certificate outcome.
///
/// Throws std::logic_error if a construction ever yields a valid path longer
/// than L, since that contradicts the enumeration.
CheckVerdict interleave_surgery_check(const Graph& g, const LongestPathReport& report,
                                      std::size_t triple_cap = kDefaultTripleCap);

/// Replays an interleave_surgery witness: the paths must be longest paths of
/// g and the indices must satisfy the premise.
bool replay_interleave_witness(const Graph& g, const CheckVerdict& verdict);

}  // namespace gallai
