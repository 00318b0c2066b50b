#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "seymour/digraph.hpp"

namespace seymour {

// Distance label for vertices with no directed path from the source.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Per-vertex degree/neighborhood summary.
struct NeighborhoodProfile {
  int vertex = 0;
  int n1 = 0;       // |N1(v)|, equals out-degree
  int n2 = 0;       // |N2(v)|, vertices at directed distance exactly 2
  int in_degree = 0;
  int out_degree = 0;
  bool is_seymour = false;  // n2 >= n1
};

struct Triangle {
  int a = 0, b = 0, c = 0;  // arcs a->b, b->c, c->a
};

// Outcome of the Seymour-guided triangle scan.  When no triangle is found the
// diagnostic fields describe the pivot vertex that was tried.
struct TriangleSearch {
  std::optional<Triangle> triangle;
  int pivot = -1;           // Seymour vertex used as the starting point
  int pivot_out = 0;        // |N1(pivot)|
  int pivot_nonsucc = 0;    // vertices outside {pivot} + N1(pivot) + in-neighbors
};

VertexSet first_neighborhood(const Digraph& g, int v);
VertexSet second_neighborhood(const Digraph& g, int v);

// BFS distances; unreachable vertices get kUnreachable (never a fake n).
std::vector<int> distances_from(const Digraph& g, int v);

VertexSet seymour_set(const Digraph& g);

// Tournament with every eccentricity <= 2 only: a vertex is Seymour exactly
// when out_degree <= in_degree.  The caller checks applicability; this routine
// just evaluates the degree rule.
VertexSet seymour_set_degree_criterion(const Tournament& t);

bool eccentricity_at_most_2(const Digraph& g);

std::vector<NeighborhoodProfile> neighborhood_profiles(const Digraph& g);

// Tournament on n = 3k vertices with min in/out degree >= n/3: walks from the
// first Seymour vertex to a directed triangle.  Throws std::invalid_argument
// when the degree/divisibility preconditions fail.
TriangleSearch find_triangle_via_seymour(const Tournament& t);

namespace detail {

// Bitset kernels over raw adjacency rows; shared with the experiment drivers,
// which keep growing row storage outside any Digraph.

// Count of vertices with |N2| >= |N1|.  When min_ratio is non-null it also
// receives min over vertices with n1 > 0 of n2/n1 (+inf if every n1 == 0).
int seymour_count_general(RowView g, double* min_ratio = nullptr);

// Per-vertex |N2| >= |N1| flags via the same kernel.
std::vector<bool> seymour_flags_general(RowView g);

// True when every vertex reaches all others within two steps.
bool closure_covers_all(RowView g);

// Count of vertices with 2*out_degree <= n-1 (tournament rows only).
int degree_criterion_count(RowView g);

}  // namespace detail

}  // namespace seymour
