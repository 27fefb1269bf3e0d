#include "gallai/surgery.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "gallai/error.hpp"

namespace gallai {
namespace {

struct Piece {
  std::string name;
  std::vector<Vertex> vertices;
};

// p[from..to] (1-based, inclusive) walking forward; empty when from > to.
std::vector<Vertex> forward(const VertexPath& p, int from, int to) {
  std::vector<Vertex> out;
  for (int i = from; i <= to; ++i) out.push_back(p[static_cast<std::size_t>(i - 1)]);
  return out;
}

// p[from..to] walking backward; empty when from < to.
std::vector<Vertex> backward(const VertexPath& p, int from, int to) {
  std::vector<Vertex> out;
  for (int i = from; i >= to; --i) out.push_back(p[static_cast<std::size_t>(i - 1)]);
  return out;
}

std::optional<Collision> first_defect(const Graph& g, const std::vector<Vertex>& walk,
                                      const std::vector<WalkSegment>& segments) {
  auto segment_at = [&](std::size_t pos) -> const std::string& {
    for (const auto& s : segments) {
      if (pos >= s.begin && pos < s.end) return s.name;
    }
    return segments.back().name;
  };
  std::array<std::ptrdiff_t, kMaxOrder> first_seen;
  first_seen.fill(-1);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Vertex v = walk[i];
    auto& seen = first_seen[static_cast<std::size_t>(v)];
    if (seen >= 0) {
      return Collision{Collision::Kind::RepeatedVertex, v, -1, segment_at(static_cast<std::size_t>(seen)), segment_at(i)};
    }
    if (i > 0 && !g.adjacent(walk[i - 1], v)) {
      return Collision{Collision::Kind::MissingEdge, walk[i - 1], v, segment_at(i - 1), segment_at(i)};
    }
    seen = static_cast<std::ptrdiff_t>(i);
  }
  return std::nullopt;
}

SurgeryCertificate assemble(const Graph& g, std::string construction, int L, const std::vector<Piece>& pieces,
                            int claimed) {
  SurgeryCertificate cert;
  cert.construction = std::move(construction);
  cert.longest_order = L;
  cert.claimed_order = claimed;
  for (const auto& piece : pieces) {
    const std::size_t begin = cert.walk.size();
    cert.walk.insert(cert.walk.end(), piece.vertices.begin(), piece.vertices.end());
    cert.segments.push_back({piece.name, begin, cert.walk.size()});
  }
  cert.actual_order = static_cast<int>(cert.walk.size());
  cert.valid_path = is_path(g, cert.walk);
  cert.beats_L = cert.valid_path && cert.actual_order > L;
  if (!cert.valid_path) cert.collision = first_defect(g, cert.walk, cert.segments);
  return cert;
}

void premise(bool condition, const std::string& clause) {
  if (!condition) throw Error(ErrorKind::PremiseViolated, clause);
}

void require_paths(const Graph& g, std::initializer_list<const VertexPath*> paths) {
  int order = -1;
  for (const VertexPath* p : paths) {
    premise(is_path(g, *p), p->to_string() + " is not a path of the graph");
    premise(order < 0 || p->order() == order, "paths differ in order");
    order = p->order();
  }
}

Vertex at(const VertexPath& p, int index) { return p[static_cast<std::size_t>(index - 1)]; }

bool in_range(const VertexPath& p, int index) { return index >= 1 && index <= p.order(); }

std::string describe(const SurgeryCertificate& cert) {
  if (cert.beats_L) return "valid path of order " + std::to_string(cert.actual_order);
  if (cert.valid_path) return "valid path of order " + std::to_string(cert.actual_order) + ", not longer than L";
  const auto& c = *cert.collision;
  if (c.kind == Collision::Kind::RepeatedVertex) {
    return "vertex " + std::to_string(c.vertex) + " repeated in " + c.first_segment + " and " + c.second_segment;
  }
  return "no edge " + std::to_string(c.vertex) + "-" + std::to_string(c.other) + " between " + c.first_segment +
         " and " + c.second_segment;
}

constexpr std::string_view kInterleave = "interleave_surgery";

}  // namespace

SurgeryCertificate lemma1_surgery(const Graph& g, const VertexPath& pi, const VertexPath& pj, const VertexPath& connector) {
  require_paths(g, {&pi, &pj});
  premise(is_path(g, connector), "connector " + connector.to_string() + " is not a path of the graph");
  if ((pi.mask() & pj.mask()) != 0) throw Error(ErrorKind::NotDisjoint, "the two paths share a vertex");
  if (connector.order() < 2 || !pi.contains(connector.front()) || !pj.contains(connector.back())) {
    throw Error(ErrorKind::EndpointNotOnPath, "connector must run from a vertex of pi to a vertex of pj");
  }
  const VertexMask interior = connector.mask() & ~bit(connector.front()) & ~bit(connector.back());
  if ((interior & (pi.mask() | pj.mask())) != 0) {
    throw Error(ErrorKind::ConnectorTouchesInterior, "connector interior meets pi or pj");
  }

  const int L = pi.order();
  // majority side: k >= ceil((L+1)/2)
  auto orient = [L](const VertexPath& p, Vertex endpoint) {
    const int k = *p.position(endpoint);
    return k >= L + 1 - k ? std::pair{p, k} : std::pair{p.reversed(), L + 1 - k};
  };
  const auto [a, k] = orient(pi, connector.front());
  const auto [b, k_prime] = orient(pj, connector.back());
  const int b_interior = connector.order() - 2;

  return assemble(g, "lemma1", L,
                  {{"pi-front", forward(a, 1, k)},
                   {"connector", forward(connector, 2, connector.order() - 1)},
                   {"pj-front", backward(b, k_prime, 1)}},
                  k + b_interior + k_prime);
}

SurgeryCertificate lemma2_surgery(const Graph& g, const VertexPath& pi, const VertexPath& pj, int k, int k_prime) {
  require_paths(g, {&pi, &pj});
  const int L = pi.order();
  if (L % 2 != 0) throw Error(ErrorKind::WrongParity, "path order " + std::to_string(L) + " is odd");
  if (std::popcount(pi.mask() & pj.mask()) != 1) {
    throw Error(ErrorKind::NotSingleIntersection, "paths must share exactly one vertex");
  }
  if (!in_range(pi, k) || !in_range(pj, k_prime) || at(pi, k) != at(pj, k_prime)) {
    throw Error(ErrorKind::IndexMismatch, "pi[k] and pj[k'] must both be the shared vertex");
  }
  const int m = L / 2;

  std::string note;
  VertexPath a = pi;
  VertexPath b = pj;
  if (k < m) {
    a = pi.reversed();
    k = L + 1 - k;
  }
  if (k_prime < m) {
    b = pj.reversed();
    k_prime = L + 1 - k_prime;
  }
  if (k == m || k_prime == m) {
    note = "an index equals m; reversing that path would give m + 1";
    if (k == m && k_prime == m) note += " and select case 1 instead of case 2";
  }

  SurgeryCertificate cert;
  if (k > m || k_prime > m) {
    // the path whose shared index exceeds m supplies the prefix
    const bool first_is_pi = k > m;
    const VertexPath& lead = first_is_pi ? a : b;
    const VertexPath& back = first_is_pi ? b : a;
    const int lead_k = first_is_pi ? k : k_prime;
    const int back_k = first_is_pi ? k_prime : k;
    cert = assemble(g, "lemma2-case1", L,
                    {{first_is_pi ? "pi-prefix" : "pj-prefix", forward(lead, 1, lead_k)},
                     {first_is_pi ? "pj-prefix" : "pi-prefix", backward(back, back_k - 1, 1)}},
                    lead_k + back_k - 1);
  } else {
    cert = assemble(g, "lemma2-case2", L,
                    {{"pi-suffix", backward(a, L, k)}, {"pj-suffix", forward(b, k_prime + 1, L)}},
                    (L - k + 1) + (L - k_prime));
  }
  cert.closed_form_order = 2 * m + 1;
  cert.note = std::move(note);
  return cert;
}

std::optional<std::string> lemma3_premise_violation(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                                    const VertexPath& p3, int t_p, int r_s, int t_q) {
  try {
    require_paths(g, {&p1, &p2, &p3});
  } catch (const Error& e) {
    return std::string(e.what());
  }
  if (!in_range(p2, t_p) || !in_range(p2, r_s) || !in_range(p2, t_q)) return "indices outside 1..L";
  if (!(t_p < r_s && r_s < t_q)) return "t_p < r_s < t_q";
  const Vertex vp = at(p2, t_p);
  const Vertex vr = at(p2, r_s);
  const Vertex vq = at(p2, t_q);
  if (!p1.contains(vp) || !p1.contains(vq)) return "p2[t_p] and p2[t_q] lie on p1";
  if (!p3.contains(vr)) return "p2[r_s] lies on p3";
  if (p1.contains(vr)) return "p2[r_s] is not common to all three paths";
  if (p3.contains(vp)) return "p2[t_p] is not common to all three paths";
  for (int i = t_p + 1; i < t_q; ++i) {
    if (i == r_s) continue;
    const Vertex v = at(p2, i);
    if (p1.contains(v) || p3.contains(v)) return "no other meeting of p2 with p1 or p3 between t_p and t_q";
  }
  if (*p1.position(vp) != t_p || *p1.position(vq) != t_q || *p3.position(vr) != r_s) {
    return "junction vertices sit at equal indices on every path";
  }
  return std::nullopt;
}

SurgeryCertificate lemma3_surgery(const Graph& g, const VertexPath& p1, const VertexPath& p2, const VertexPath& p3,
                                  int t_p, int r_s, int t_q) {
  if (auto clause = lemma3_premise_violation(g, p1, p2, p3, t_p, r_s, t_q)) {
    throw Error(ErrorKind::PremiseViolated, *clause);
  }
  const int L = p2.order();
  return assemble(g, "lemma3", L,
                  {{"p3-prefix", forward(p3, 1, r_s)},
                   {"p2-back", backward(p2, r_s - 1, t_p)},
                   {"p1-bridge", forward(p1, t_p + 1, t_q)},
                   {"p1-tail", forward(p1, t_q + 1, L)}},
                  L + 2 * (r_s - t_p));
}

SurgeryCertificate case1_final_surgery(const Graph& g, const VertexPath& p1, const VertexPath& p2,
                                       const VertexPath& p3, int t_a, int r_1) {
  require_paths(g, {&p1, &p2, &p3});
  premise((p1.mask() & p2.mask() & p3.mask()) == 0, "the three paths have no common vertex");
  const auto meet12 = common_vertices(p2, p1);
  const auto meet23 = common_vertices(p2, p3);
  premise(!meet12.positions_a.empty() && !meet23.positions_a.empty(), "p2 meets both p1 and p3");
  premise(t_a == *std::max_element(meet12.positions_a.begin(), meet12.positions_a.end()),
          "t_a is the largest index of a p1-p2 common vertex on p2");
  premise(r_1 == *std::min_element(meet23.positions_a.begin(), meet23.positions_a.end()),
          "r_1 is the smallest index of a p2-p3 common vertex on p2");
  premise(t_a < r_1, "t_a < r_1");
  premise(*p1.position(at(p2, t_a)) == t_a && *p3.position(at(p2, r_1)) == r_1,
          "junction vertices sit at equal indices on every path");

  const int L = p2.order();
  auto cert = assemble(g, "case1-final", L,
                       {{"p1-tail", backward(p1, L, t_a)},
                        {"p2-middle", forward(p2, t_a + 1, r_1)},
                        {"p3-tail", forward(p3, r_1 + 1, L)}},
                       (L - t_a + 1) + (r_1 - t_a) + (L - r_1));
  const int x = t_a;
  const int y = L - r_1;
  cert.closed_form_order = 3 * L - 2 * (x + y);
  if (*cert.closed_form_order != cert.claimed_order) {
    cert.note = "segment count " + std::to_string(cert.claimed_order) + " differs from 3L - 2(x+y) = " +
                std::to_string(*cert.closed_form_order);
  }
  return cert;
}

bool validate_certificate(const Graph& g, const SurgeryCertificate& cert, int L) {
  const bool valid = is_path(g, cert.walk);
  const int actual = static_cast<int>(cert.walk.size());
  const bool beats = valid && actual > L;
  if (valid != cert.valid_path || actual != cert.actual_order || beats != cert.beats_L) return false;
  if (cert.collision.has_value() == valid) return false;
  if (cert.collision && cert.collision->kind == Collision::Kind::RepeatedVertex &&
      std::count(cert.walk.begin(), cert.walk.end(), cert.collision->vertex) < 2) {
    return false;
  }
  return true;
}

CheckVerdict interleave_surgery_check(const Graph& g, const LongestPathReport& report, std::size_t triple_cap) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "check requires a connected graph");
  if (triple_cap == 0) throw Error(ErrorKind::InvalidParams, "triple cap must be at least 1");
  CheckVerdict verdict;
  verdict.property = std::string(kInterleave);
  verdict.capped = report.truncated;

  const auto& paths = report.paths;
  const int L = report.order_L;

  // Returns true once a premise-satisfying configuration is recorded.
  auto examine = [&](const VertexPath& p1, const VertexPath& p2, const VertexPath& p3) {
    // indices on p2 where p2 meets p1 or p3, in order; an admissible
    // (t_p, r_s, t_q) is three consecutive entries of this list
    std::vector<int> meets;
    for (int i = 1; i <= L; ++i) {
      const Vertex v = at(p2, i);
      if (p1.contains(v) || p3.contains(v)) meets.push_back(i);
    }
    for (std::size_t i = 0; i + 2 < meets.size(); ++i) {
      const int t_p = meets[i], r_s = meets[i + 1], t_q = meets[i + 2];
      if (lemma3_premise_violation(g, p1, p2, p3, t_p, r_s, t_q)) continue;
      const auto cert = lemma3_surgery(g, p1, p2, p3, t_p, r_s, t_q);
      if (cert.beats_L) {
        throw std::logic_error("rerouting produced a path longer than the longest path: " + describe(cert));
      }
      verdict.holds = false;
      verdict.witness = Witness{.paths = {p1, p2, p3},
                                .vertices = cert.collision ? std::vector<Vertex>{cert.collision->vertex} : std::vector<Vertex>{},
                                .indices = {t_p, r_s, t_q},
                                .detail = describe(cert)};
      return true;
    }
    return false;
  };

  std::size_t examined = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      for (std::size_t k = j + 1; k < paths.size(); ++k) {
        if (examined == triple_cap) {
          verdict.capped = true;
          return verdict;
        }
        ++examined;
        const std::array<const VertexPath*, 3> trio{&paths[i], &paths[j], &paths[k]};
        for (std::size_t mid = 0; mid < 3; ++mid) {
          const VertexPath& p2 = *trio[mid];
          const VertexPath& x = *trio[(mid + 1) % 3];
          const VertexPath& y = *trio[(mid + 2) % 3];
          // p2[t_p] lies on p1 only, p2[r_s] on p3 only, p2[t_q] on p1
          const VertexMask only_x = p2.mask() & x.mask() & ~y.mask();
          const VertexMask only_y = p2.mask() & y.mask() & ~x.mask();
          if (only_x == 0 || only_y == 0) continue;
          const bool x_outer = std::popcount(p2.mask() & x.mask()) >= 2;
          const bool y_outer = std::popcount(p2.mask() & y.mask()) >= 2;
          const std::array<VertexPath, 2> xs{x, x.reversed()};
          const std::array<VertexPath, 2> ys{y, y.reversed()};
          for (const auto& xo : xs) {
            for (const auto& yo : ys) {
              if (x_outer && examine(xo, p2, yo)) return verdict;
              if (y_outer && examine(yo, p2, xo)) return verdict;
            }
          }
        }
      }
    }
  }
  return verdict;
}

bool replay_interleave_witness(const Graph& g, const CheckVerdict& verdict) {
  if (verdict.holds || !verdict.witness || verdict.property != kInterleave) return false;
  const auto& w = *verdict.witness;
  if (w.paths.size() != 3 || w.indices.size() != 3) return false;
  const int L = longest_path_order(g);
  for (const auto& p : w.paths) {
    if (!is_path(g, p) || p.order() != L) return false;
  }
  return !lemma3_premise_violation(g, w.paths[0], w.paths[1], w.paths[2], w.indices[0], w.indices[1], w.indices[2]);
}

}  // namespace gallai
