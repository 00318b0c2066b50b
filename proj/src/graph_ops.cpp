#include "seymour/graph_ops.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace seymour {

namespace {

void check_vertex(const Digraph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range(std::string(what) + ": vertex index out of range");
  }
}

inline void or_into(std::uint64_t* acc, const std::uint64_t* row, int words) {
  for (int i = 0; i < words; ++i) acc[i] |= row[i];
}

// acc |= rows of every out-neighbor of v; caller masks afterwards.
inline void union_of_successor_rows(RowView g, const std::uint64_t* row_v,
                                    std::uint64_t* acc) {
  for_each_set_bit(row_v, g.words, [&](int u) { or_into(acc, g.row(u), g.words); });
}

}  // namespace

VertexSet first_neighborhood(const Digraph& g, int v) {
  check_vertex(g, v, "first_neighborhood");
  return VertexSet(g.order(), g.row(v));
}

VertexSet second_neighborhood(const Digraph& g, int v) {
  check_vertex(g, v, "second_neighborhood");
  const RowView view = g.view();
  const std::uint64_t* r = view.row(v);
  std::vector<std::uint64_t> acc(view.words, 0);
  union_of_successor_rows(view, r, acc.data());
  for (int i = 0; i < view.words; ++i) acc[i] &= ~r[i];
  clear_bit(acc.data(), v);
  return VertexSet(g.order(), acc.data());
}

std::vector<int> distances_from(const Digraph& g, int v) {
  check_vertex(g, v, "distances_from");
  const RowView view = g.view();
  const int words = view.words;
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  dist[v] = 0;
  set_bit(visited.data(), v);
  set_bit(frontier.data(), v);
  int d = 0;
  while (popcount_words(frontier.data(), words) > 0) {
    ++d;
    std::fill(next.begin(), next.end(), 0);
    for_each_set_bit(frontier.data(), words,
                     [&](int u) { or_into(next.data(), view.row(u), words); });
    for (int i = 0; i < words; ++i) next[i] &= ~visited[i];
    for_each_set_bit(next.data(), words, [&](int x) { dist[x] = d; });
    for (int i = 0; i < words; ++i) visited[i] |= next[i];
    frontier = next;
  }
  return dist;
}

VertexSet seymour_set(const Digraph& g) {
  const RowView view = g.view();
  std::vector<bool> flags = detail::seymour_flags_general(view);
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (flags[v]) out.insert(v);
  }
  return out;
}

VertexSet seymour_set_degree_criterion(const Tournament& t) {
  const Digraph& g = t.digraph();
  const std::vector<int> indeg = g.in_degrees();
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) <= indeg[v]) out.insert(v);
  }
  return out;
}

bool eccentricity_at_most_2(const Digraph& g) {
  return detail::closure_covers_all(g.view());
}

std::vector<NeighborhoodProfile> neighborhood_profiles(const Digraph& g) {
  const RowView view = g.view();
  const int n = view.n;
  const int words = view.words;
  const std::vector<int> indeg = g.in_degrees();
  std::vector<NeighborhoodProfile> out(n);
  std::vector<std::uint64_t> acc(words);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* r = view.row(v);
    std::fill(acc.begin(), acc.end(), 0);
    union_of_successor_rows(view, r, acc.data());
    for (int i = 0; i < words; ++i) acc[i] &= ~r[i];
    clear_bit(acc.data(), v);
    NeighborhoodProfile& p = out[v];
    p.vertex = v;
    p.n1 = popcount_words(r, words);
    p.n2 = popcount_words(acc.data(), words);
    p.out_degree = p.n1;
    p.in_degree = indeg[v];
    p.is_seymour = p.n2 >= p.n1;
  }
  return out;
}

TriangleSearch find_triangle_via_seymour(const Tournament& t) {
  const Digraph& g = t.digraph();
  const int n = g.order();
  if (n % 3 != 0) {
    throw std::invalid_argument("find_triangle_via_seymour: order must be divisible by 3");
  }
  const int bound = n / 3;
  const std::vector<int> indeg = g.in_degrees();
  for (int v = 0; v < n; ++v) {
    if (g.out_degree(v) < bound || indeg[v] < bound) {
      throw std::invalid_argument(
          "find_triangle_via_seymour: min in/out degree must be >= order/3");
    }
  }

  const RowView view = g.view();
  const int words = view.words;
  const std::vector<bool> seymour = detail::seymour_flags_general(view);
  int pivot = -1;
  for (int v = 0; v < n; ++v) {
    if (seymour[v]) {
      pivot = v;
      break;
    }
  }

  TriangleSearch result;
  if (pivot < 0) return result;  // cannot happen for a tournament; defensive

  // Bitset of in-neighbors of the pivot.
  std::vector<std::uint64_t> into_pivot(words, 0);
  for (int x = 0; x < n; ++x) {
    if (test_bit(view.row(x), pivot)) set_bit(into_pivot.data(), x);
  }

  const std::uint64_t* r = view.row(pivot);
  result.pivot = pivot;
  result.pivot_out = popcount_words(r, words);
  result.pivot_nonsucc =
      n - 1 - result.pivot_out - popcount_words(into_pivot.data(), words);

  for (int w = 0; w < words && !result.triangle; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      const int u = w * kWordBits + std::countr_zero(bits);
      bits &= bits - 1;
      // First in-neighbor of the pivot that u beats closes pivot->u->w->pivot.
      const std::uint64_t* ru = view.row(u);
      for (int i = 0; i < words; ++i) {
        const std::uint64_t hit = ru[i] & into_pivot[i];
        if (hit) {
          result.triangle = Triangle{pivot, u, i * kWordBits + std::countr_zero(hit)};
          break;
        }
      }
      if (result.triangle) break;
    }
  }
  return result;
}

namespace detail {

std::vector<bool> seymour_flags_general(RowView g) {
  const int n = g.n;
  const int words = g.words;
  std::vector<bool> flags(n, false);
  std::vector<std::uint64_t> acc(words);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* r = g.row(v);
    std::fill(acc.begin(), acc.end(), 0);
    union_of_successor_rows(g, r, acc.data());
    for (int i = 0; i < words; ++i) acc[i] &= ~r[i];
    clear_bit(acc.data(), v);
    flags[v] = popcount_words(acc.data(), words) >= popcount_words(r, words);
  }
  return flags;
}

int seymour_count_general(RowView g, double* min_ratio) {
  const int n = g.n;
  const int words = g.words;
  int count = 0;
  double ratio = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> acc(words);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* r = g.row(v);
    std::fill(acc.begin(), acc.end(), 0);
    union_of_successor_rows(g, r, acc.data());
    for (int i = 0; i < words; ++i) acc[i] &= ~r[i];
    clear_bit(acc.data(), v);
    const int n1 = popcount_words(r, words);
    const int n2 = popcount_words(acc.data(), words);
    if (n2 >= n1) ++count;
    if (min_ratio && n1 > 0) {
      ratio = std::min(ratio, static_cast<double>(n2) / static_cast<double>(n1));
    }
  }
  if (min_ratio) *min_ratio = ratio;
  return count;
}

bool closure_covers_all(RowView g) {
  const int n = g.n;
  const int words = g.words;
  std::vector<std::uint64_t> full(words, 0);
  fill_prefix_mask(full.data(), words, n);
  std::vector<std::uint64_t> acc(words);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* r = g.row(v);
    for (int i = 0; i < words; ++i) acc[i] = r[i];
    set_bit(acc.data(), v);
    bool covered = std::equal(acc.begin(), acc.end(), full.begin());
    if (covered) continue;
    for (int w = 0; w < words && !covered; ++w) {
      std::uint64_t bits = r[w];
      while (bits && !covered) {
        const int u = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        or_into(acc.data(), g.row(u), words);
        covered = std::equal(acc.begin(), acc.end(), full.begin());
      }
    }
    if (!covered) return false;
  }
  return true;
}

int degree_criterion_count(RowView g) {
  int count = 0;
  for (int v = 0; v < g.n; ++v) {
    if (2 * popcount_words(g.row(v), g.words) <= g.n - 1) ++count;
  }
  return count;
}

}  // namespace detail

}  // namespace seymour
