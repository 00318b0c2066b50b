#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "seymour/graph_ops.hpp"
#include "seymour/models.hpp"

using namespace seymour;

namespace {

Digraph three_cycle() {
  Digraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 0);
  return g;
}

// Order vertices 0 -> everything after it: the unique acyclic tournament.
Tournament transitive_tournament(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v);
  }
  return Tournament::from_digraph(std::move(g));
}

// Vertex i beats i+1, ..., i+(n-1)/2 (mod n); regular for odd n.
Tournament rotational_tournament(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= (n - 1) / 2; ++d) g.add_arc(i, (i + d) % n);
  }
  return Tournament::from_digraph(std::move(g));
}

// Reference second neighborhood via plain set arithmetic.
std::vector<int> naive_n2(const Digraph& g, int v) {
  const int n = g.order();
  std::vector<bool> n1(n, false);
  for (int u = 0; u < n; ++u) n1[u] = g.has_arc(v, u);
  std::vector<bool> out(n, false);
  for (int u = 0; u < n; ++u) {
    if (!n1[u]) continue;
    for (int w = 0; w < n; ++w) {
      if (g.has_arc(u, w) && w != v && !n1[w]) out[w] = true;
    }
  }
  std::vector<int> res;
  for (int w = 0; w < n; ++w) {
    if (out[w]) res.push_back(w);
  }
  return res;
}

}  // namespace

TEST_CASE("directed 3-cycle: every vertex has |N1| = |N2| = 1") {
  const Digraph g = three_cycle();
  for (int v = 0; v < 3; ++v) {
    CHECK(first_neighborhood(g, v).count() == 1);
    CHECK(second_neighborhood(g, v).count() == 1);
  }
  CHECK(seymour_set(g).count() == 3);
}

TEST_CASE("transitive tournament: only the sink qualifies") {
  const Tournament t = transitive_tournament(4);
  const VertexSet s = seymour_set(t.digraph());
  CHECK(s.to_vector() == std::vector<int>{3});
  // The sink has no out-neighbors at all, so 0 >= 0 holds trivially.
  CHECK(second_neighborhood(t.digraph(), 3).count() == 0);
}

TEST_CASE("sink vertices always qualify") {
  RngStream rng(31, 0);
  Digraph g = gen_digraph(12, 0.25, rng);
  for (int v = 0; v < 12; ++v) g.remove_arc(7, v);  // force a sink
  CHECK(seymour_set(g).contains(7));
}

TEST_CASE("BFS distances on a directed path") {
  Digraph g(5);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  const std::vector<int> d = distances_from(g, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, kUnreachable});
  const std::vector<int> d3 = distances_from(g, 3);
  CHECK(d3[3] == 0);
  CHECK(d3[0] == kUnreachable);
}

TEST_CASE("N1/N2 partition against distances on random graphs") {
  RngStream rng(17, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + int(rng.next_u64() % 40);
    Digraph g = (rep % 2 == 0)
                    ? gen_tournament(n, rng).digraph()
                    : gen_digraph(n, 0.3, rng);
    for (int v = 0; v < n; ++v) {
      const VertexSet n1 = first_neighborhood(g, v);
      const VertexSet n2 = second_neighborhood(g, v);
      const std::vector<int> dist = distances_from(g, v);
      CHECK_FALSE(n1.contains(v));
      CHECK_FALSE(n2.contains(v));
      for (int u = 0; u < n; ++u) {
        CHECK(n1.contains(u) == (dist[u] == 1));
        CHECK(n2.contains(u) == (dist[u] == 2));
        CHECK_FALSE((n1.contains(u) && n2.contains(u)));
      }
      CHECK(second_neighborhood(g, v).to_vector() == naive_n2(g, v));
    }
  }
}

TEST_CASE("seymour_set equals the per-vertex definition") {
  RngStream rng(18, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 2 + int(rng.next_u64() % 30);
    const Digraph g = gen_digraph(n, 0.2, rng);
    const VertexSet s = seymour_set(g);
    for (int v = 0; v < n; ++v) {
      const bool expect =
          second_neighborhood(g, v).count() >= first_neighborhood(g, v).count();
      CHECK(s.contains(v) == expect);
    }
  }
}

TEST_CASE("degree rule matches the neighborhood definition when ecc <= 2") {
  RngStream rng(19, 0);
  int checked = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const Tournament t = gen_tournament(25, rng);
    if (!eccentricity_at_most_2(t.digraph())) continue;
    ++checked;
    CHECK(seymour_set_degree_criterion(t).to_vector() ==
          seymour_set(t.digraph()).to_vector());
  }
  CHECK(checked > 30);  // ecc <= 2 is the typical case at this size
}

TEST_CASE("eccentricity_at_most_2 agrees with BFS distances") {
  RngStream rng(20, 0);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 2 + int(rng.next_u64() % 25);
    const Digraph g = (rep % 2 == 0)
                          ? gen_tournament(n, rng).digraph()
                          : gen_digraph(n, 0.35, rng);
    bool all_within = true;
    for (int v = 0; v < n && all_within; ++v) {
      for (int d : distances_from(g, v)) {
        if (d > 2) {
          all_within = false;
          break;
        }
      }
    }
    CHECK(eccentricity_at_most_2(g) == all_within);
  }
}

TEST_CASE("profiles are internally consistent") {
  RngStream rng(21, 0);
  const Digraph g = gen_digraph(30, 0.3, rng);
  const std::vector<int> ins = g.in_degrees();
  const VertexSet s = seymour_set(g);
  const auto profiles = neighborhood_profiles(g);
  REQUIRE(profiles.size() == 30);
  for (int v = 0; v < 30; ++v) {
    const NeighborhoodProfile& pr = profiles[v];
    CHECK(pr.vertex == v);
    CHECK(pr.n1 == first_neighborhood(g, v).count());
    CHECK(pr.n2 == second_neighborhood(g, v).count());
    CHECK(pr.out_degree == g.out_degree(v));
    CHECK(pr.n1 == pr.out_degree);
    CHECK(pr.in_degree == ins[v]);
    CHECK(pr.is_seymour == s.contains(v));
  }
}

TEST_CASE("triangle search on the 3-cycle") {
  const Tournament t = Tournament::from_digraph(three_cycle());
  const TriangleSearch r = find_triangle_via_seymour(t);
  REQUIRE(r.triangle.has_value());
  const Triangle tri = *r.triangle;
  CHECK(t.digraph().has_arc(tri.a, tri.b));
  CHECK(t.digraph().has_arc(tri.b, tri.c));
  CHECK(t.digraph().has_arc(tri.c, tri.a));
}

TEST_CASE("triangle search on regular rotational tournaments") {
  for (int n : {9, 15, 33}) {
    const Tournament t = rotational_tournament(n);
    const TriangleSearch r = find_triangle_via_seymour(t);
    REQUIRE_MESSAGE(r.triangle.has_value(), "n=" << n);
    const Triangle tri = *r.triangle;
    CHECK(t.digraph().has_arc(tri.a, tri.b));
    CHECK(t.digraph().has_arc(tri.b, tri.c));
    CHECK(t.digraph().has_arc(tri.c, tri.a));
  }
}

TEST_CASE("triangle search enforces its preconditions") {
  // Size not divisible by three.
  CHECK_THROWS_AS(find_triangle_via_seymour(rotational_tournament(5)),
                  std::invalid_argument);
  // Divisible size but a vertex with out-degree 0 < n/3.
  CHECK_THROWS_AS(find_triangle_via_seymour(transitive_tournament(6)),
                  std::invalid_argument);
}
