#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seymour/bitops.hpp"

namespace seymour {

// Read-only view of a packed adjacency matrix: n rows of `words` 64-bit
// words each, bit v of row u meaning arc u -> v. Bits >= n are zero.
struct RowView {
  const std::uint64_t* rows;
  int n;
  int words;

  const std::uint64_t* row(int u) const { return rows + std::size_t(u) * words; }
};

/// Set of vertices out of a fixed universe [0, n), packed into words.
class VertexSet {
 public:
  explicit VertexSet(int n);
  VertexSet(int n, const std::uint64_t* row_words);

  int universe() const { return n_; }
  int count() const;
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  std::vector<int> to_vector() const;

  std::uint64_t* words() { return words_.data(); }
  const std::uint64_t* words() const { return words_.data(); }
  int word_count() const { return static_cast<int>(words_.size()); }

  bool operator==(const VertexSet&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

/// Simple directed graph: no self-loops, no parallel arcs. Anti-parallel
/// pairs are representable in general; model generators never emit them.
///
/// Stored as one bitset row per vertex. Instances are treated as immutable
/// once built, so any graph may be shared across threads without locking.
class Digraph {
 public:
  explicit Digraph(int n);

  int order() const { return n_; }
  int words_per_row() const { return words_; }
  RowView view() const { return RowView{rows_.data(), n_, words_}; }

  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  const std::uint64_t* row(int u) const { return rows_.data() + std::size_t(u) * words_; }
  std::uint64_t* row_mut(int u) { return rows_.data() + std::size_t(u) * words_; }

  int out_degree(int u) const;
  std::vector<int> in_degrees() const;
  long long arc_count() const;

  bool operator==(const Digraph&) const = default;

  /// Plain-text form: first line n, then n lines of '0'/'1' adjacency rows.
  std::string to_text() const;
  static Digraph from_text(std::istream& in);
  static Digraph from_text(const std::string& text);

 private:
  void check_vertex(int v, const char* what) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

/// Orientation of the complete graph: exactly one arc per vertex pair.
class Tournament {
 public:
  /// Validates the tournament invariants; throws std::invalid_argument.
  static Tournament from_digraph(Digraph g);
  /// Skips validation; for generators whose output is valid by construction.
  static Tournament from_digraph_unchecked(Digraph g);

  int order() const { return g_.order(); }
  const Digraph& digraph() const { return g_; }
  RowView view() const { return g_.view(); }

 private:
  explicit Tournament(Digraph g) : g_(std::move(g)) {}
  Digraph g_;
};

bool is_tournament(const Digraph& g);

/// True iff no pair has arcs in both directions.
bool has_no_antiparallel_pair(const Digraph& g);

}  // namespace seymour
