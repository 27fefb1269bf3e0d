#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gallai/error.hpp"
#include "gallai/generate.hpp"
#include "gallai/surgery.hpp"
#include "support.hpp"

using namespace gallai;

namespace {

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

// Graph whose edges are exactly the consecutive pairs of the given sequences.
Graph union_of(int order, std::initializer_list<std::vector<Vertex>> seqs) {
  std::vector<Edge> edges;
  for (const auto& s : seqs) {
    for (std::size_t i = 1; i < s.size(); ++i) edges.emplace_back(s[i - 1], s[i]);
  }
  return Graph(order, edges);
}

// Adjacency and distinctness checked straight from an edge list.
bool walk_is_path(const std::vector<Edge>& edges, const std::vector<Vertex>& walk) {
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (std::count(walk.begin(), walk.end(), walk[i]) != 1) return false;
    if (i == 0) continue;
    const Edge e{std::min(walk[i - 1], walk[i]), std::max(walk[i - 1], walk[i])};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) return false;
  }
  return true;
}

void check_certificate(const Graph& g, const SurgeryCertificate& cert) {
  CHECK(validate_certificate(g, cert, cert.longest_order));
  CHECK(cert.valid_path == is_path(g, cert.walk));
  CHECK(cert.actual_order == static_cast<int>(cert.walk.size()));
  if (cert.valid_path) CHECK(cert.actual_order == cert.claimed_order);
  if (cert.beats_L) CHECK(cert.valid_path);
  CHECK(cert.collision.has_value() == !cert.valid_path);
  if (cert.collision && cert.collision->kind == Collision::Kind::RepeatedVertex) {
    CHECK(std::count(cert.walk.begin(), cert.walk.end(), cert.collision->vertex) >= 2);
  }
}

struct Case1Gadget {
  Graph g;
  VertexPath p1, p2, p3;
};

// p2 = <0..L-1>; p1 meets p2 only at p2[t_a] and p3 only at p2[r_1], both
// at the same index; every other vertex is fresh.
Case1Gadget case1_gadget(int L, int t_a, int r_1) {
  std::vector<Vertex> p2(static_cast<std::size_t>(L));
  std::iota(p2.begin(), p2.end(), 0);
  Vertex fresh = L;
  std::vector<Vertex> p1, p3;
  for (int i = 1; i <= L; ++i) p1.push_back(i == t_a ? p2[static_cast<std::size_t>(i - 1)] : fresh++);
  for (int i = 1; i <= L; ++i) p3.push_back(i == r_1 ? p2[static_cast<std::size_t>(i - 1)] : fresh++);
  return {union_of(fresh, {p1, p2, p3}), VertexPath(p1), VertexPath(p2), VertexPath(p3)};
}

}  // namespace

TEST_CASE("lemma1 named configurations") {
  // a1..a3 = 0..2, b1..b3 = 3..5
  const Graph g = union_of(8, {{0, 1, 2}, {3, 4, 5}, {1, 4}, {1, 6, 7, 4}});
  const VertexPath pi{0, 1, 2}, pj{3, 4, 5};

  const auto direct = lemma1_surgery(g, pi, pj, VertexPath{1, 4});
  CHECK(direct.walk == std::vector<Vertex>{0, 1, 4, 3});
  CHECK(direct.actual_order == 4);
  CHECK(direct.claimed_order == 4);
  CHECK(direct.beats_L);
  check_certificate(g, direct);

  const auto longer = lemma1_surgery(g, pi, pj, VertexPath{1, 6, 7, 4});
  CHECK(longer.actual_order == 6);
  CHECK(longer.claimed_order == 2 + 2 + 2);
  CHECK(longer.beats_L);
  check_certificate(g, longer);
}

TEST_CASE("lemma1 reorients toward the majority side") {
  // even L = 4, connector at index 2 of both paths; ceil(L/2) = 2 would give
  // a walk of order 4, the majority side gives 3 + 3 = 6
  const Graph g = union_of(8, {{0, 1, 2, 3}, {4, 5, 6, 7}, {1, 5}});
  const auto cert = lemma1_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 5, 6, 7}, VertexPath{1, 5});
  CHECK(cert.walk == std::vector<Vertex>{3, 2, 1, 5, 6, 7});
  CHECK(cert.beats_L);
}

TEST_CASE("lemma1 premises") {
  const Graph g = union_of(8, {{0, 1, 2}, {3, 4, 5}, {1, 4}, {1, 6, 4}, {2, 3}, {1, 3}});
  CHECK(error_of([&] { lemma1_surgery(g, VertexPath{0, 1, 2}, VertexPath{3, 5, 4}, VertexPath{1, 3}); }) ==
        ErrorKind::PremiseViolated);  // 3-5 is not an edge
  CHECK(error_of([&] { lemma1_surgery(g, VertexPath{0, 1, 2}, VertexPath{3, 4}, VertexPath{1, 4}); }) ==
        ErrorKind::PremiseViolated);
  CHECK(error_of([&] { lemma1_surgery(g, VertexPath{0, 1, 2}, VertexPath{3, 4, 5}, VertexPath{4, 1}); }) ==
        ErrorKind::EndpointNotOnPath);
  CHECK(error_of([&] { lemma1_surgery(g, VertexPath{0, 1, 2}, VertexPath{3, 4, 5}, VertexPath{1, 2, 3}); }) ==
        ErrorKind::ConnectorTouchesInterior);
  const Graph overlap = union_of(5, {{0, 1, 2}, {2, 3, 4}, {1, 3}});
  CHECK(error_of([&] { lemma1_surgery(overlap, VertexPath{0, 1, 2}, VertexPath{2, 3, 4}, VertexPath{1, 3}); }) ==
        ErrorKind::NotDisjoint);
}

TEST_CASE("lemma1 fuzzing always beats L") {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int L = 1 + static_cast<int>(rng.uniform_below(8));
    const int b = static_cast<int>(rng.uniform_below(4));
    const int noise = static_cast<int>(rng.uniform_below(4));
    const int n = 2 * L + b + noise;
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[rng.uniform_below(i)]);
    std::vector<Vertex> pi(labels.begin(), labels.begin() + L);
    std::vector<Vertex> pj(labels.begin() + L, labels.begin() + 2 * L);
    std::vector<Vertex> conn{pi[rng.uniform_below(static_cast<std::uint64_t>(L))]};
    for (int i = 0; i < b; ++i) conn.push_back(labels[static_cast<std::size_t>(2 * L + i)]);
    conn.push_back(pj[rng.uniform_below(static_cast<std::uint64_t>(L))]);

    std::vector<Edge> edges;
    for (auto* s : {&pi, &pj, &conn}) {
      for (std::size_t i = 1; i < s->size(); ++i) edges.emplace_back((*s)[i - 1], (*s)[i]);
    }
    for (int extra = 0; extra < n; ++extra) {
      const auto u = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
      if (u != v) edges.emplace_back(u, v);
    }
    const Graph g(n, edges);
    const auto cert = lemma1_surgery(g, VertexPath(pi), VertexPath(pj), VertexPath(conn));
    REQUIRE(cert.beats_L);
    REQUIRE(cert.actual_order == cert.claimed_order);
    REQUIRE(validate_certificate(g, cert, L));
  }
}

TEST_CASE("lemma2 case 1") {
  const Graph g = union_of(7, {{0, 1, 2, 3}, {4, 5, 2, 6}});
  const auto cert = lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 5, 2, 6}, 3, 3);
  CHECK(cert.construction == "lemma2-case1");
  CHECK(cert.walk == std::vector<Vertex>{0, 1, 2, 5, 4});
  CHECK(cert.actual_order == 5);
  CHECK(cert.claimed_order == 5);
  CHECK(cert.closed_form_order == 5);
  CHECK(cert.beats_L);
  CHECK(cert.note.empty());
  check_certificate(g, cert);
}

TEST_CASE("lemma2 case 2") {
  const Graph g = union_of(7, {{0, 1, 2, 3}, {4, 1, 5, 6}});
  const auto cert = lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 1, 5, 6}, 2, 2);
  CHECK(cert.construction == "lemma2-case2");
  CHECK(cert.walk == std::vector<Vertex>{3, 2, 1, 5, 6});
  CHECK(cert.actual_order == 5);
  CHECK(cert.beats_L);
  CHECK_FALSE(cert.note.empty());
  check_certificate(g, cert);
}

TEST_CASE("lemma2 with one index equal to m reaches only order L") {
  // k = 3 > m, k' = m = 2: the weak normalization keeps pj as given and the
  // case-1 walk has k + k' - 1 = 4 vertices
  const Graph g = union_of(7, {{0, 1, 2, 3}, {4, 2, 5, 6}});
  const auto cert = lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 2, 5, 6}, 3, 2);
  CHECK(cert.valid_path);
  CHECK(cert.actual_order == 4);
  CHECK_FALSE(cert.beats_L);
  CHECK_FALSE(cert.note.empty());
  check_certificate(g, cert);
}

TEST_CASE("lemma2 premises") {
  const Graph g = union_of(7, {{0, 1, 2, 3}, {4, 5, 2, 6}, {0, 1, 2}, {4, 2, 6}});
  CHECK(error_of([&] { lemma2_surgery(g, VertexPath{0, 1, 2}, VertexPath{4, 2, 6}, 3, 2); }) == ErrorKind::WrongParity);
  CHECK(error_of([&] { lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{0, 1, 2, 3}, 3, 3); }) ==
        ErrorKind::NotSingleIntersection);
  CHECK(error_of([&] { lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 5, 2, 6}, 2, 3); }) ==
        ErrorKind::IndexMismatch);
  CHECK(error_of([&] { lemma2_surgery(g, VertexPath{0, 1, 2, 3}, VertexPath{4, 5, 2, 6}, 3, 9); }) ==
        ErrorKind::IndexMismatch);
}

TEST_CASE("lemma2 fuzzing on single-intersection pairs") {
  Xoshiro256 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_below(5));
    const int L = 2 * m;
    const int n = 2 * L - 1;
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[rng.uniform_below(i)]);
    const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(L)));
    const int kp = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(L)));
    std::vector<Vertex> pi(labels.begin(), labels.begin() + L);
    std::vector<Vertex> pj(labels.begin() + L, labels.end());
    pj.insert(pj.begin() + (kp - 1), pi[static_cast<std::size_t>(k - 1)]);
    const Graph g = union_of(n, {pi, pj});
    const auto cert = lemma2_surgery(g, VertexPath(pi), VertexPath(pj), k, kp);
    check_certificate(g, cert);
    REQUIRE(cert.valid_path);
    // full reorientation would put both indices above m; only then is the
    // walk guaranteed to beat L
    if (cert.note.empty()) REQUIRE(cert.beats_L);
  }
}

TEST_CASE("lemma3 gadget with disjoint segments") {
  // p2 = <0..7>; t_p = 2, r_s = 4, t_q = 6
  const std::vector<Vertex> p2{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<Vertex> p1{8, 1, 9, 10, 11, 5, 12, 13};
  const std::vector<Vertex> p3{14, 15, 16, 3, 17, 18, 19, 20};
  const Graph g = union_of(21, {p1, p2, p3});

  const auto cert = lemma3_surgery(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 4, 6);
  const std::vector<Vertex> expected{14, 15, 16, 3, 2, 1, 9, 10, 11, 5, 12, 13};
  CHECK(cert.walk == expected);
  CHECK(walk_is_path(g.edges(), expected));
  CHECK(cert.claimed_order == 8 + 2 * (4 - 2));
  CHECK(cert.actual_order == cert.claimed_order);
  CHECK(cert.beats_L);
  check_certificate(g, cert);
  CHECK(interleave_scan(VertexPath(p1), VertexPath(p2), VertexPath(p3)) == Interleaving{2, 4, 6});

  CHECK(error_of([&] { lemma3_surgery(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 2, 6); }) ==
        ErrorKind::PremiseViolated);
  CHECK(lemma3_premise_violation(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 2, 6) == "t_p < r_s < t_q");
  CHECK(lemma3_premise_violation(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 1, 4, 6).has_value());
}

TEST_CASE("lemma3 collision when p3's prefix reuses p1's tail") {
  const std::vector<Vertex> p2{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<Vertex> p1{8, 1, 9, 10, 11, 5, 12, 13};
  const std::vector<Vertex> p3{12, 15, 16, 3, 17, 18, 19, 20};
  const Graph g = union_of(21, {p1, p2, p3});
  const auto cert = lemma3_surgery(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 4, 6);
  CHECK_FALSE(cert.valid_path);
  REQUIRE(cert.collision);
  CHECK(cert.collision->kind == Collision::Kind::RepeatedVertex);
  CHECK(cert.collision->vertex == 12);
  CHECK(cert.collision->first_segment == "p3-prefix");
  CHECK(cert.collision->second_segment == "p1-tail");
  check_certificate(g, cert);
}

TEST_CASE("lemma3 premise clauses") {
  const std::vector<Vertex> p2{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<Vertex> p3{14, 15, 16, 3, 17, 18, 19, 20};
  SUBCASE("extra meeting between t_p and t_q") {
    const std::vector<Vertex> p1{8, 1, 2, 10, 11, 5, 12, 13};
    const Graph g = union_of(21, {p1, p2, p3});
    CHECK(lemma3_premise_violation(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 4, 6) ==
          "no other meeting of p2 with p1 or p3 between t_p and t_q");
  }
  SUBCASE("junctions not aligned") {
    const std::vector<Vertex> p1{1, 8, 9, 10, 11, 5, 12, 13};
    const Graph g = union_of(21, {p1, p2, p3});
    CHECK(lemma3_premise_violation(g, VertexPath(p1), VertexPath(p2), VertexPath(p3), 2, 4, 6) ==
          "junction vertices sit at equal indices on every path");
  }
  SUBCASE("p2[t_p] on all three paths") {
    const std::vector<Vertex> p1{8, 1, 9, 10, 11, 5, 12, 13};
    const std::vector<Vertex> p3b{1, 15, 16, 3, 17, 18, 19, 20};
    const Graph g = union_of(21, {p1, p2, p3b});
    CHECK(lemma3_premise_violation(g, VertexPath(p1), VertexPath(p2), VertexPath(p3b), 2, 4, 6) ==
          "p2[t_p] is not common to all three paths");
  }
}

TEST_CASE("case1 final construction") {
  SUBCASE("segment count matches the closed form when 2 r_1 = L + 1") {
    auto [g, p1, p2, p3] = case1_gadget(9, 3, 5);
    const auto cert = case1_final_surgery(g, p1, p2, p3, 3, 5);
    const int x = 3, y = 9 - 5;
    CHECK(cert.actual_order == 3 * 9 - 2 * (x + y));
    CHECK(cert.claimed_order == cert.actual_order);
    CHECK(cert.closed_form_order == cert.actual_order);
    CHECK(cert.beats_L);
    CHECK(cert.note.empty());
    CHECK(walk_is_path(g.edges(), cert.walk));
    check_certificate(g, cert);
  }
  SUBCASE("otherwise the closed form overstates or understates the walk") {
    auto [g, p1, p2, p3] = case1_gadget(8, 3, 6);
    const auto cert = case1_final_surgery(g, p1, p2, p3, 3, 6);
    CHECK(cert.actual_order == 2 * 8 - 2 * 3 + 1);
    CHECK(cert.claimed_order == cert.actual_order);
    CHECK(cert.closed_form_order == 3 * 8 - 2 * (3 + 2));
    CHECK_FALSE(cert.note.empty());
    check_certificate(g, cert);
  }
  SUBCASE("long common prefix: valid walk that does not beat L") {
    auto [g, p1, p2, p3] = case1_gadget(8, 6, 7);
    const auto cert = case1_final_surgery(g, p1, p2, p3, 6, 7);
    CHECK(cert.valid_path);
    CHECK(cert.actual_order == 5);
    CHECK_FALSE(cert.beats_L);
    CHECK(*cert.closed_form_order > 8);
    check_certificate(g, cert);
  }
  SUBCASE("t_a >= r_1 (x + y >= L) is outside the premise") {
    auto [g, p1, p2, p3] = case1_gadget(8, 5, 5);
    CHECK(error_of([&] { case1_final_surgery(g, p1, p2, p3, 5, 5); }) == ErrorKind::PremiseViolated);
  }
  SUBCASE("wrong t_a") {
    auto [g, p1, p2, p3] = case1_gadget(8, 3, 6);
    CHECK(error_of([&] { case1_final_surgery(g, p1, p2, p3, 2, 6); }) == ErrorKind::PremiseViolated);
  }
}

TEST_CASE("validate_certificate detects tampering") {
  const Graph g = union_of(8, {{0, 1, 2}, {3, 4, 5}, {1, 6, 7, 4}});
  const auto cert = lemma1_surgery(g, VertexPath{0, 1, 2}, VertexPath{3, 4, 5}, VertexPath{1, 6, 7, 4});
  CHECK(validate_certificate(g, cert, 3));

  auto swapped = cert;
  std::swap(swapped.walk[0], swapped.walk[2]);
  CHECK_FALSE(validate_certificate(g, swapped, 3));

  const Graph other = generate({.family = Family::Path, .order = 8});
  CHECK_FALSE(validate_certificate(other, cert, 3));

  auto wrong_order = cert;
  wrong_order.actual_order += 1;
  CHECK_FALSE(validate_certificate(g, wrong_order, 3));
  CHECK_FALSE(validate_certificate(g, cert, 10));  // beats_L no longer true
}

TEST_CASE("interleave_surgery_check on small graphs") {
  std::size_t witnesses = 0;
  for (const auto& g : testing::exhaustive_corpus(6)) {
    const auto r = enumerate_longest_paths(g, 1'000'000);
    const auto v = interleave_surgery_check(g, r);
    if (!v.holds) {
      ++witnesses;
      REQUIRE(replay_interleave_witness(g, v));
    }
  }
  MESSAGE("interleaving witnesses on orders <= 6: " << witnesses);
}

TEST_CASE("interleave_surgery_check finds configurations in a supplied path set") {
  const std::vector<Vertex> p2{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<Vertex> p1{8, 1, 9, 10, 11, 5, 12, 13};
  SUBCASE("a certificate longer than L contradicts the report") {
    const std::vector<Vertex> p3{14, 15, 16, 3, 17, 18, 19, 20};
    const Graph g = union_of(21, {p1, p2, p3});
    // order 8 is not the true longest order here; the report is deliberately wrong
    LongestPathReport fake{.order_L = 8, .paths = {VertexPath(p1).canonical(), VertexPath(p2).canonical(),
                                                   VertexPath(p3).canonical()}};
    std::sort(fake.paths.begin(), fake.paths.end());
    CHECK_THROWS_AS(interleave_surgery_check(g, fake), std::logic_error);
  }
  SUBCASE("a colliding configuration is reported as a witness") {
    const std::vector<Vertex> p3{12, 15, 16, 3, 17, 18, 19, 20};
    const Graph g = union_of(21, {p1, p2, p3, {14, 0}});
    LongestPathReport fake{.order_L = 8, .paths = {VertexPath(p1).canonical(), VertexPath(p2).canonical(),
                                                   VertexPath(p3).canonical()}};
    std::sort(fake.paths.begin(), fake.paths.end());
    const auto v = interleave_surgery_check(g, fake);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->indices == std::vector<int>{2, 4, 6});
    CHECK(v.witness->vertices == std::vector<Vertex>{12});
    CHECK_FALSE(replay_interleave_witness(g, v));  // the paths are not longest in g
  }
}
