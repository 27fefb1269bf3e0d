#include "gallai/intersect.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

#include "gallai/error.hpp"

namespace gallai {
namespace {

constexpr std::string_view kPairwise = "pairwise";
constexpr std::string_view kLemma2Vertex = "lemma2_vertex";
constexpr std::string_view kLemma2Edge = "lemma2_edge";
constexpr std::string_view kAlignment = "alignment";
constexpr std::string_view kTriple = "triple";
constexpr std::string_view kGallai = "gallai";

void require_connected(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "check requires a connected graph");
}

void require_path(const Graph& g, const VertexPath& p) {
  if (!is_path(g, p)) {
    throw Error(ErrorKind::PathsFromDifferentGraphs, p.to_string() + " is not a path of the given graph");
  }
}

// pos[v] = 1-based index of v on p, 0 when absent
std::array<int, kMaxOrder> positions(const VertexPath& p) {
  std::array<int, kMaxOrder> pos{};
  for (int i = 0; i < p.order(); ++i) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i + 1;
  return pos;
}

std::string_view lemma2_name(ParityConvention convention) {
  return convention == ParityConvention::VertexCount ? kLemma2Vertex : kLemma2Edge;
}

int parity_measure(int order_L, ParityConvention convention) {
  return convention == ParityConvention::VertexCount ? order_L : order_L - 1;
}

CheckVerdict make_verdict(std::string_view property, const LongestPathReport& report) {
  CheckVerdict v;
  v.property = std::string(property);
  v.capped = report.truncated;
  return v;
}

void fail(CheckVerdict& verdict, Witness witness) {
  verdict.holds = false;
  verdict.witness = std::move(witness);
}

// Scans unordered pairs of distinct paths until `violates` returns true.
template <typename Pred>
std::optional<std::pair<std::size_t, std::size_t>> find_pair(const std::vector<VertexPath>& paths, Pred violates) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (violates(paths[i], paths[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

// find_pair for predicates of the two vertex sets only. Paths sharing a mask
// are interchangeable, so only the first path of each mask (and, for the
// pair within one mask, its second path) is examined; the pair returned is
// the same one find_pair would return.
template <typename Pred>
std::optional<std::pair<std::size_t, std::size_t>> find_mask_pair(const std::vector<VertexPath>& paths, Pred violates) {
  struct Group {
    VertexMask mask;
    std::size_t first;
    std::optional<std::size_t> second;
  };
  std::vector<Group> groups;
  std::unordered_map<VertexMask, std::size_t> group_of;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [it, inserted] = group_of.try_emplace(paths[i].mask(), groups.size());
    if (inserted) {
      groups.push_back({paths[i].mask(), i, std::nullopt});
    } else if (!groups[it->second].second) {
      groups[it->second].second = i;
    }
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    std::optional<std::size_t> best;
    if (groups[a].second && violates(groups[a].mask, groups[a].mask)) best = groups[a].second;
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      if (best && groups[b].first > *best) break;
      if (violates(groups[a].mask, groups[b].mask)) {
        best = groups[b].first;
        break;
      }
    }
    if (best) return std::pair{groups[a].first, *best};
  }
  return std::nullopt;
}

// First misaligned common vertex for the orientations as given.
std::optional<Vertex> first_misaligned(const VertexPath& a, const VertexPath& b) {
  const auto pos_b = positions(b);
  for (int i = 0; i < a.order(); ++i) {
    const Vertex v = a[static_cast<std::size_t>(i)];
    const int pb = pos_b[static_cast<std::size_t>(v)];
    if (pb != 0 && pb != i + 1) return v;
  }
  return std::nullopt;
}

bool all_longest(const Graph& g, const std::vector<VertexPath>& paths, std::size_t count) {
  if (paths.size() != count) return false;
  const int L = longest_path_order(g);
  return std::all_of(paths.begin(), paths.end(), [&](const VertexPath& p) { return is_path(g, p) && p.order() == L; });
}

}  // namespace

PairIntersection common_vertices(const VertexPath& a, const VertexPath& b) {
  PairIntersection out;
  const auto pos_a = positions(a);
  const auto pos_b = positions(b);
  for (Vertex v : mask_vertices(a.mask() & b.mask())) {
    out.common.push_back(v);
    out.positions_a.push_back(pos_a[static_cast<std::size_t>(v)]);
    out.positions_b.push_back(pos_b[static_cast<std::size_t>(v)]);
  }
  return out;
}

PairIntersection common_vertices(const Graph& g, const VertexPath& a, const VertexPath& b) {
  require_path(g, a);
  require_path(g, b);
  return common_vertices(a, b);
}

CheckVerdict pairwise_check(const Graph& g, const LongestPathReport& report) {
  require_connected(g);
  CheckVerdict verdict = make_verdict(kPairwise, report);
  auto hit = find_mask_pair(report.paths, [](VertexMask a, VertexMask b) { return (a & b) == 0; });
  if (hit) fail(verdict, {.paths = {report.paths[hit->first], report.paths[hit->second]}, .detail = "disjoint longest paths"});
  return verdict;
}

CheckVerdict pairwise_check(const Graph& g) {
  require_connected(g);
  return pairwise_check(g, enumerate_longest_paths(g, kDefaultPathCap));
}

CheckVerdict lemma2_check(const Graph& g, const LongestPathReport& report, ParityConvention convention) {
  require_connected(g);
  CheckVerdict verdict = make_verdict(lemma2_name(convention), report);
  if (parity_measure(report.order_L, convention) % 2 != 0) {
    verdict.vacuous = true;
    verdict.capped = false;
    return verdict;
  }
  if (report.paths.size() <= 1 && !report.truncated) return verdict;
  auto hit = find_mask_pair(report.paths, [](VertexMask a, VertexMask b) { return std::popcount(a & b) < 2; });
  if (hit) {
    const auto& a = report.paths[hit->first];
    const auto& b = report.paths[hit->second];
    const auto common = common_vertices(a, b);
    fail(verdict, {.paths = {a, b},
                   .vertices = common.common,
                   .indices = [&] {
                     std::vector<int> idx;
                     for (std::size_t i = 0; i < common.common.size(); ++i) {
                       idx.push_back(common.positions_a[i]);
                       idx.push_back(common.positions_b[i]);
                     }
                     return idx;
                   }(),
                   .detail = "longest paths share fewer than two vertices"});
  }
  return verdict;
}

CheckVerdict lemma2_check(const Graph& g, ParityConvention convention) {
  require_connected(g);
  return lemma2_check(g, enumerate_longest_paths(g, kDefaultPathCap), convention);
}

bool aligned_somehow(const VertexPath& a, const VertexPath& b) {
  const VertexPath ar = a.reversed();
  const VertexPath br = b.reversed();
  for (const VertexPath* x : {&a, &ar}) {
    for (const VertexPath* y : {&b, &br}) {
      if (!first_misaligned(*x, *y)) return true;
    }
  }
  return false;
}

CheckVerdict index_alignment_check(const Graph& g, const LongestPathReport& report) {
  require_connected(g);
  CheckVerdict verdict = make_verdict(kAlignment, report);
  auto hit = find_pair(report.paths, [](const VertexPath& a, const VertexPath& b) { return !aligned_somehow(a, b); });
  if (hit) {
    const auto& a = report.paths[hit->first];
    const auto& b = report.paths[hit->second];
    const Vertex v = *first_misaligned(a, b);
    fail(verdict, {.paths = {a, b},
                   .vertices = {v},
                   .indices = {*a.position(v), *b.position(v)},
                   .detail = "no orientation aligns the shared vertices"});
  }
  return verdict;
}

CheckVerdict index_alignment_check(const Graph& g) {
  require_connected(g);
  return index_alignment_check(g, enumerate_longest_paths(g, kDefaultPathCap));
}

std::optional<Interleaving> interleave_scan(const VertexPath& p1, const VertexPath& p2, const VertexPath& p3) {
  std::vector<int> t;  // indices on p2 of p1 ∩ p2
  std::vector<int> r;  // indices on p2 of p2 ∩ p3, three-way vertices excluded
  for (int i = 0; i < p2.order(); ++i) {
    const Vertex v = p2[static_cast<std::size_t>(i)];
    const bool on1 = p1.contains(v);
    const bool on3 = p3.contains(v);
    if (on1) t.push_back(i + 1);
    if (on3 && !on1) r.push_back(i + 1);
  }
  if (t.size() < 2 || r.empty()) return std::nullopt;
  for (int tp : t) {
    for (int rs : r) {
      if (rs <= tp) continue;
      auto tq = std::upper_bound(t.begin(), t.end(), rs);
      if (tq != t.end()) return Interleaving{tp, rs, *tq};
    }
  }
  return std::nullopt;
}

std::optional<Interleaving> interleave_scan(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                            const VertexPath& p3) {
  require_path(g, p1);
  require_path(g, p2);
  require_path(g, p3);
  return interleave_scan(p1, p2, p3);
}

std::vector<Vertex> gallai_set(const LongestPathReport& report) {
  if (report.truncated) throw Error(ErrorKind::TruncatedReport, "Gallai set needs the complete list of longest paths");
  if (report.paths.empty()) return {};
  VertexMask common = ~VertexMask{0};
  for (const auto& p : report.paths) common &= p.mask();
  return mask_vertices(common);
}

CheckVerdict triple_check(const Graph& g, const LongestPathReport& report, std::size_t triple_cap) {
  require_connected(g);
  if (report.truncated) throw Error(ErrorKind::TruncatedReport, "triple check needs the complete list of longest paths");
  if (triple_cap == 0) throw Error(ErrorKind::InvalidParams, "triple cap must be at least 1");
  CheckVerdict verdict = make_verdict(kTriple, report);
  const auto& paths = report.paths;
  if (paths.size() < 3) {
    verdict.vacuous = true;
    return verdict;
  }
  if (!gallai_set(report).empty()) return verdict;

  std::size_t examined = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const VertexMask ij = paths[i].mask() & paths[j].mask();
      for (std::size_t k = j + 1; k < paths.size(); ++k) {
        if (examined == triple_cap) {
          verdict.capped = true;
          return verdict;
        }
        ++examined;
        if ((ij & paths[k].mask()) == 0) {
          fail(verdict, {.paths = {paths[i], paths[j], paths[k]}, .detail = "three longest paths with no common vertex"});
          return verdict;
        }
      }
    }
  }
  return verdict;
}

CheckVerdict triple_check(const Graph& g, std::size_t triple_cap) {
  require_connected(g);
  return triple_check(g, enumerate_longest_paths(g, kDefaultPathCap), triple_cap);
}

CheckVerdict gallai_check(const Graph& g, const LongestPathReport& report) {
  require_connected(g);
  CheckVerdict verdict = make_verdict(kGallai, report);
  if (gallai_set(report).empty()) fail(verdict, {.detail = "no vertex lies on every longest path"});
  return verdict;
}

bool replay_witness(const Graph& g, const CheckVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const auto& paths = verdict.witness->paths;
  const std::string_view property = verdict.property;
  if (property == kPairwise) {
    return all_longest(g, paths, 2) && (paths[0].mask() & paths[1].mask()) == 0;
  }
  if (property == kLemma2Vertex || property == kLemma2Edge) {
    const auto convention = property == kLemma2Vertex ? ParityConvention::VertexCount : ParityConvention::EdgeCount;
    return all_longest(g, paths, 2) && paths[0].canonical() != paths[1].canonical() &&
           parity_measure(paths[0].order(), convention) % 2 == 0 && std::popcount(paths[0].mask() & paths[1].mask()) < 2;
  }
  if (property == kAlignment) {
    return all_longest(g, paths, 2) && !aligned_somehow(paths[0], paths[1]);
  }
  if (property == kTriple) {
    return all_longest(g, paths, 3) && (paths[0].mask() & paths[1].mask() & paths[2].mask()) == 0;
  }
  if (property == kGallai) {
    return gallai_set(enumerate_longest_paths(g, kDefaultPathCap)).empty();
  }
  return false;
}

}  // namespace gallai
